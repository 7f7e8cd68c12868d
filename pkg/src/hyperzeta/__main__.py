import sys

from hyperzeta.infrastructure.cli.main import main

sys.exit(main())
