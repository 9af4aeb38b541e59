import sys

from orbifano.cli import main

sys.exit(main())
