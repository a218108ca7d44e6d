"""Core package for the stable-tau engine."""
