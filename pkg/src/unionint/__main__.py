import sys

from unionint.cli import main

sys.exit(main())
