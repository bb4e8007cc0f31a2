"""Two-axis affect classification: polarity and intensity mapped onto Thayer's quadrants."""

__version__ = "0.1.0"


class Affect2DError(Exception):
    """Base class for every error raised by this package."""
