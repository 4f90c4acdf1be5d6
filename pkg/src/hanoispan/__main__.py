import sys

from hanoispan.cli import main

sys.exit(main())
