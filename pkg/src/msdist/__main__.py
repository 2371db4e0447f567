import sys

from msdist.cli import main

sys.exit(main())
