"""
Logging configuration for the preprojective toolkit
"""
import logging
from pathlib import Path
from datetime import datetime
from rich.console import Console
from rich.logging import RichHandler

# Rich console for formatted output
console = Console()

# Global logger instance
toolkit_logger = None


class VerificationFilter(logging.Filter):
    """Pass only records logged with extra={'verification': True}"""

    def filter(self, record):
        return getattr(record, 'verification', False)


def setup_logging(level: str = "INFO", environment: str = "development", log_dir: str = "logs"):
    """
    Setup logging configuration with rich formatting

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        environment: Environment name (development, production)
        log_dir: Directory for the log files

    Returns:
        The configured toolkit logger
    """
    global toolkit_logger

    # Create logs directory if it doesn't exist
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)

    # Configure logging level
    log_level = getattr(logging, level.upper(), logging.INFO)

    # Create logger
    toolkit_logger = logging.getLogger("preprojective")
    toolkit_logger.setLevel(log_level)

    # Clear existing handlers
    toolkit_logger.handlers.clear()

    # Console handler with Rich formatting
    console_handler = RichHandler(
        console=console,
        show_time=True,
        show_path=False,
        markup=True,
        rich_tracebacks=True,
        tracebacks_show_locals=environment == "development"
    )
    console_handler.setLevel(log_level)

    # File handler for persistent logs
    log_file = log_path / f"toolkit_{datetime.now().strftime('%Y%m%d')}.log"
    file_handler = logging.FileHandler(log_file)
    file_handler.setLevel(logging.DEBUG)  # Always log DEBUG to file

    # Format for file logs
    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    file_handler.setFormatter(file_formatter)

    # Add handlers
    toolkit_logger.addHandler(console_handler)
    toolkit_logger.addHandler(file_handler)

    # Separate file for verification outcomes
    verification_file = log_path / f"verification_{datetime.now().strftime('%Y%m%d')}.log"
    verification_handler = logging.FileHandler(verification_file)
    verification_handler.setLevel(logging.INFO)
    verification_handler.setFormatter(file_formatter)
    # Only records logged with extra={'verification': True}
    verification_handler.addFilter(VerificationFilter())
    toolkit_logger.addHandler(verification_handler)

    # Prevent propagation to root logger
    toolkit_logger.propagate = False

    toolkit_logger.info(f"Logging initialized - Level: {level}, Environment: {environment}")

    return toolkit_logger


# Initialize with default settings if imported directly
if toolkit_logger is None:
    toolkit_logger = setup_logging()
