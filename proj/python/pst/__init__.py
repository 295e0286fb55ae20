"""PST definitions: parsing, DZFC translation, expansion metrics and rendering."""

import json
from pathlib import Path

from ._core import (
    COUNT_CAP,
    BudgetExceeded,
    LexiconError,
    ParseError,
    PstError,
    RenderError,
    UnknownDefinition,
    parse_lexicon,
)
from ._core import Corpus as _Corpus

__all__ = [
    "COUNT_CAP",
    "BudgetExceeded",
    "Corpus",
    "LexiconError",
    "ParseError",
    "PstError",
    "RenderError",
    "UnknownDefinition",
    "parse_lexicon",
]


class Corpus(_Corpus):
    """A growing store of translated definitions. Ids are labels or symbols."""

    def load_file(self, path):
        return self.load(Path(path).read_text(encoding="utf-8"))

    def dzfc(self, id):
        return json.loads(self.dzfc_json(id))

    def report(self):
        return json.loads(self.stats())

    def measure(self, id, mode="full"):
        length, depth, alt_depth = self.profile(id, mode)
        return {"length": length, "depth": depth, "alt_depth": alt_depth}
