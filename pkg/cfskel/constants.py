from pathlib import Path


ROOT = Path(__file__).absolute().parent
SETTINGS_DIR = ROOT / "settings"
PRESETS_SETTINGS_DIR = SETTINGS_DIR / "presets"
FIXTURES_DIR = SETTINGS_DIR / "fixtures"
DEFAULT_SETTINGS_PATH = SETTINGS_DIR / "defaults.json"

DEFAULT_KEY = "default"
DEFAULT_CONFIG_FILE = "cfskel.json"

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2

MALFORMED_JSON = "malformed-json"
MISSING_FIELD = "missing-field"
BAD_RATIONAL = "bad-rational"
NON_POSITIVE_LENGTH = "non-positive-length"
DUPLICATE_ID = "duplicate-id"
UNKNOWN_ID = "unknown-id"
DISCONNECTED_GRAPH = "disconnected-graph"
INVALID_GRAPH = "invalid-graph"
MALFORMED_COVER = "malformed-cover"
INCOMPLETE_FUNCTION = "incomplete-function"
