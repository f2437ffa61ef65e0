import os
import json
import logging
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _env_int(name, default):
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={value!r}, using {default}")
        return default


class Config:
    OUTPUT_DIR = os.getenv("SRG_OUTPUT_DIR", os.path.join(os.getcwd(), "output"))
    DATA_DIR = os.getenv("SRG_DATA_DIR", os.path.join(os.getcwd(), "data"))

    # Census engine
    CENSUS_WORKERS = _env_int("CENSUS_WORKERS", 1)
    BRUTE_BUDGET = _env_int("BRUTE_BUDGET", 10**8)
    LONG_BRUTE_BUDGET = _env_int("LONG_BRUTE_BUDGET", 10**10)
    # "auto" picks brute force below this many subsets, esu+completion above
    AUTO_BRUTE_LIMIT = _env_int("AUTO_BRUTE_LIMIT", 10**6)

    SHOW_PROGRESS = os.getenv("SHOW_PROGRESS", "True").lower() == "true"
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

    # User Settings File
    USER_SETTINGS_FILE = os.path.join(os.getcwd(), "user_settings.json")

    @staticmethod
    def load_user_settings():
        """Load user settings from JSON file. Returns default dict if file missing."""
        default_settings = {
            "threads": Config.CENSUS_WORKERS,
            "format": "json",
            "long": False,
        }

        if os.path.exists(Config.USER_SETTINGS_FILE):
            try:
                with open(Config.USER_SETTINGS_FILE, 'r') as f:
                    saved_settings = json.load(f)

                if "threads" in saved_settings:
                    saved_settings["threads"] = int(saved_settings["threads"])
                    Config.CENSUS_WORKERS = saved_settings["threads"]

                # Update defaults with saved values (preserves new keys if defaults expand)
                default_settings.update(saved_settings)

            except (OSError, ValueError, TypeError) as e:
                logger.warning(f"Error loading user settings: {e}")

        return default_settings

    @staticmethod
    def save_user_settings(settings):
        """Save user settings dict to JSON file."""
        try:
            with open(Config.USER_SETTINGS_FILE, 'w') as f:
                json.dump(settings, f, indent=4)
        except OSError as e:
            logger.warning(f"Error saving user settings: {e}")

    @staticmethod
    def brute_budget(long=False):
        return Config.LONG_BRUTE_BUDGET if long else Config.BRUTE_BUDGET

    @staticmethod
    def validate():
        ok = True
        if Config.CENSUS_WORKERS < 1:
            logger.warning(f"Warning: CENSUS_WORKERS={Config.CENSUS_WORKERS} is not positive, using 1.")
            Config.CENSUS_WORKERS = 1
            ok = False
        if Config.BRUTE_BUDGET < 1 or Config.LONG_BRUTE_BUDGET < 1:
            logger.warning("Warning: brute-force budgets must be at least 1 subset.")
            ok = False
        if Config.LONG_BRUTE_BUDGET < Config.BRUTE_BUDGET:
            logger.warning("Warning: LONG_BRUTE_BUDGET is smaller than BRUTE_BUDGET.")
            ok = False
        return ok
