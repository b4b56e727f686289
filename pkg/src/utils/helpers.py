"""
Utility functions for the regular-language witness toolkit
"""
import logging
import time
import functools
import itertools
from typing import Iterator, Sequence, Optional
from pathlib import Path

from .config import LOG_CONFIG

EPSILON_DISPLAY = "ε"


def setup_logging(name: Optional[str] = None) -> logging.Logger:
    """Setup logging configuration and return a named logger"""
    # Get or create the root logger
    root = logging.getLogger()

    # Clear existing handlers to avoid duplicates
    root.handlers.clear()

    level = getattr(logging, LOG_CONFIG["level"], logging.WARNING)
    root.setLevel(level)

    formatter = logging.Formatter(LOG_CONFIG["format"])

    # Console handler writes to stderr so command output stays clean
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(level)
    root.addHandler(console_handler)

    if LOG_CONFIG["log_file"]:
        log_file = Path(LOG_CONFIG["log_file"])
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        root.addHandler(file_handler)

    return logging.getLogger(name or __name__)


def timing_decorator(func):
    """Decorator to measure function execution time"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        logger = logging.getLogger(func.__module__)
        start_time = time.time()
        logger.info(f"Starting {func.__name__}")

        try:
            result = func(*args, **kwargs)
            execution_time = time.time() - start_time
            logger.info(f"Completed {func.__name__} in {execution_time:.2f} seconds")
            return result
        except Exception as e:
            execution_time = time.time() - start_time
            logger.error(f"Error in {func.__name__} after {execution_time:.2f} seconds: {str(e)}")
            raise

    return wrapper


def shortlex_words(symbols: Sequence[str], max_length: int) -> Iterator[str]:
    """
    Enumerate all words up to a length in shortlex order

    Args:
        symbols: Alphabet symbols in their canonical order
        max_length: Longest word length to produce

    Returns:
        Iterator over words, the empty word first
    """
    for length in range(max_length + 1):
        for letters in itertools.product(symbols, repeat=length):
            yield "".join(letters)


def format_word(word: Optional[str]) -> str:
    """Render a word for humans, using ε for the empty word"""
    if word is None:
        return "N/A"
    return word if word else EPSILON_DISPLAY
