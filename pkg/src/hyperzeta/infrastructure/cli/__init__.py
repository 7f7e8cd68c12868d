"""Command-line front end of hyperzeta."""
