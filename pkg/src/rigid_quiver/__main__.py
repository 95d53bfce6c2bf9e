"""Entry point for running rigid-quiver as a module.

Allows running with: python -m rigid_quiver
"""

from .cli import main

if __name__ == "__main__":
    main()
