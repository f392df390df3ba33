import sys

from sombor_unicyclic.cli import main

sys.exit(main())
