import sys

from disc_harmonics.cli import main

sys.exit(main())
