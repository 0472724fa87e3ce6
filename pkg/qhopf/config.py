# qhopf/config.py: runtime settings read from the environment.
#
# Every knob has a QHOPF_ prefix so it can be set per process:
#   QHOPF_THREADS          worker threads for independent checks
#   QHOPF_SEED             seed for sampled verification
#   QHOPF_EXHAUSTIVE_DIM   largest dimension checked on every basis tuple
#   QHOPF_EXHAUSTIVE_PAIRS largest dim(H)·dim(V) checked on every module basis pair
#   QHOPF_MORPHISM_DIM     largest dimension a structure morphism is checked on every pair
#   QHOPF_SAMPLES          random tuples per identity above that dimension
#   QHOPF_IDENTITY_SAMPLES samples for the identities listed as >=500 samples
#   QHOPF_MAX_WITNESSES    violations kept per report
#   QHOPF_LOG_LEVEL        logging level name
import logging
import os

THREADS = int(os.environ.get("QHOPF_THREADS", str(min(8, os.cpu_count() or 1))))
SEED = int(os.environ.get("QHOPF_SEED", "20240517"))
EXHAUSTIVE_DIM = int(os.environ.get("QHOPF_EXHAUSTIVE_DIM", "64"))
EXHAUSTIVE_PAIRS = int(os.environ.get("QHOPF_EXHAUSTIVE_PAIRS", "4096"))
MORPHISM_DIM = int(os.environ.get("QHOPF_MORPHISM_DIM", "256"))
SAMPLES = int(os.environ.get("QHOPF_SAMPLES", "200"))
IDENTITY_SAMPLES = int(os.environ.get("QHOPF_IDENTITY_SAMPLES", "500"))
MAX_WITNESSES = int(os.environ.get("QHOPF_MAX_WITNESSES", "20"))
LOG_LEVEL = os.environ.get("QHOPF_LOG_LEVEL", "WARNING").upper()

LOG_FORMAT = "[qhopf] %(levelname)s %(name)s: %(message)s"


def setup_logging(level=None):
    """Configure the root logger once; later calls only adjust the level."""
    level = (level or LOG_LEVEL).upper()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(format=LOG_FORMAT, level=level)
    root.setLevel(level)
    return root
