from pathlib import Path

from cyclemotive.toric import fan_from_json

DATA = Path(__file__).parent / "data"


def load_fan(name):
    return fan_from_json((DATA / f"fan_{name}.json").read_text())
