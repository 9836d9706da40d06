"""Main config"""

from pathlib import Path

import yaml

# Load YAML config
with open(Path(__file__).with_name("config.yaml"), encoding="utf-8") as f:
    config = yaml.safe_load(f)

# Caps
IDEAL_COUNT_CAP = config["caps"]["ideal_count"]
ORACLE_ORDER_CAP = config["caps"]["oracle_order"]
DOMINATION_VERTEX_CAP = config["caps"]["domination_vertices"]
ISOMORPHISM_VERTEX_CAP = config["caps"]["isomorphism_vertices"]

# Sweep
SWEEP_NMAX = config["sweep"]["nmax"]
SWEEP_PRODUCTS_UP_TO = config["sweep"]["products_up_to"]
SWEEP_JOBS = config["sweep"]["jobs"]

# Logging
LOG_LEVEL = config["logging"]["level"]
LOG_FORMAT = config["logging"]["format"]
