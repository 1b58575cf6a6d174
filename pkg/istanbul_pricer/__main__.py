import sys

from istanbul_pricer.cmd import main

sys.exit(main())
