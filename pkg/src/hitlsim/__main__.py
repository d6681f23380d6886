"""Entry point for python -m hitlsim."""

from hitlsim.cli.app import main

if __name__ == "__main__":
    main()
