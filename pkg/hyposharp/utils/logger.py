"""
Logger Module

This module provides a utility function to set up and configure a logger for hyposharp.
It ensures consistent logging format and configuration across the package.
"""

import logging

from hyposharp.utils.config import load_config


def setup_logger(name: str) -> logging.Logger:
    """
    Set up and configure a logger.

    Args:
        name (str): The name of the logger.

    Returns:
        logging.Logger: A configured logger instance.
    """
    config = load_config()
    logging_config = config.get("logging")

    logger = logging.getLogger(name)
    logger.setLevel(str(logging_config["level"]).upper())

    # one handler per logger, even when modules are re-imported
    if not any(getattr(handler, "_hyposharp", False) for handler in logger.handlers):
        formatter = logging.Formatter(logging_config["format"])

        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        console_handler._hyposharp = True

        logger.addHandler(console_handler)
        logger.propagate = False

    return logger
