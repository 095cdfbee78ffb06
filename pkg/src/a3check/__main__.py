import sys

from a3check.cli import main

sys.exit(main())
