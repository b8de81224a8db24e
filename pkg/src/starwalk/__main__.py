import sys

from starwalk.cli import main

sys.exit(main())
