"""Main package initialization."""
# Avoid importing moddom_cli here as it configures logging and pulls in typer
# Import it explicitly where needed instead
