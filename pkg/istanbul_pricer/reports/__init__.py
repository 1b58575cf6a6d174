from istanbul_pricer.reports.delta import delta_fd
from istanbul_pricer.reports.report import run_report
