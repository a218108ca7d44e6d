"""Command modules for the stable-tau CLI."""
