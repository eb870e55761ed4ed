import sys

from tetracount.cli import main

sys.exit(main())
