import sys

from ssakg.cli import main

sys.exit(main())
