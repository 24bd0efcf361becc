import logging
import os

LOG_LEVEL = os.getenv("LOWERZDD_LOG_LEVEL", "INFO").upper()

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="[LOWERZDD]: %(levelname)s %(asctime)s %(name)s:%(lineno)s %(message)s",  # noqa
)

# Diagram stores
NODE_BUDGET = int(os.getenv("LOWERZDD_NODE_BUDGET", 10**7))

# Command line limits
ORACLE_MAX_EDGES = int(os.getenv("LOWERZDD_ORACLE_MAX_EDGES", 24))
ENUMERATE_LIMIT = int(os.getenv("LOWERZDD_ENUMERATE_LIMIT", 10**6))
