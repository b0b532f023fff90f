"""
Ring: Composition Root

Responsibility:
Runtime configuration of the delivery mechanisms: environment variable names, default
log levels and the HTTP bind address. Model constants live in core.values.constants.
"""

SEED_ENV = "AMNESIA_SEED"
LOG_LEVEL_ENV = "AMNESIA_LOG_LEVEL"
DATABASE_URL_ENV = "AMNESIA_DATABASE_URL"

# The CLI keeps stderr quiet unless asked; the HTTP app logs requests.
CLI_LOG_LEVEL = "WARNING"
HTTP_LOG_LEVEL = "INFO"

HOST = "127.0.0.1"
PORT = 8001
