"""tutorkit: author, validate, render, and generate tutor practice interfaces."""

__version__ = "0.1.0"
