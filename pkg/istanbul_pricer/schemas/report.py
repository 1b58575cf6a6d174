from dataclasses import dataclass, field
from typing import Any, Dict

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError

TABLE1 = 'table1'
TABLE2 = 'table2'
TABLE3 = 'table3'
FIG1 = 'fig1'
FIG2 = 'fig2'
FIG3 = 'fig3'
REPORT_IDS = (TABLE1, TABLE2, TABLE3, FIG1, FIG2, FIG3)

OVERRIDABLE = ('paths', 'steps', 'engine', 'workers', 'bump')


@dataclass(frozen=True)
class ReportSpec:
    report_id: str
    output_path: str
    seed: int = settings.SEED
    overrides: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.report_id not in REPORT_IDS:
            raise DomainError(f'unknown report {self.report_id}, choose from {", ".join(REPORT_IDS)}')
        unknown = set(self.overrides) - set(OVERRIDABLE)
        if unknown:
            raise DomainError(f'unsupported overrides {sorted(unknown)}')
