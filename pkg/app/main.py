"""main entry point for the rrwork command line."""

from app.cli import cli


def run() -> None:
    """Console-script entry point."""
    cli()


if __name__ == "__main__":
    run()
