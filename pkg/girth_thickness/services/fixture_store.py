import json
import logging
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from ..config.settings import settings
from ..schemas import Decomposition
from .verification_service import verify

logger = logging.getLogger(__name__)


class FixtureError(ValueError):
    """A fixture is missing, unreadable, or fails verification."""


class FixtureStore:
    """Read-only access to the versioned small-order decompositions."""

    def __init__(self, fixtures_dir: Optional[str | Path] = None):
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else settings.fixtures_path
        self._cache: Dict[int, Decomposition] = {}

    def path_for(self, n: int) -> Path:
        return self.fixtures_dir / f"k{n}.json"

    def load(self, n: int) -> Decomposition:
        """Load and re-verify the fixture for K_n."""
        if n in self._cache:
            return self._cache[n]

        path = self.path_for(n)
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError as e:
            logger.error(f"Cannot read fixture {path}: {e}")
            raise FixtureError(f"Fixture for K_{n} not readable at {path}") from e

        try:
            decomposition = Decomposition.model_validate_json(raw)
        except ValidationError as e:
            logger.error(f"Fixture {path} does not parse: {e}")
            raise FixtureError(f"Fixture for K_{n} is malformed") from e

        if decomposition.n != n:
            raise FixtureError(f"Fixture {path} holds K_{decomposition.n}, expected K_{n}")

        report = verify(decomposition)
        if not report.ok:
            logger.error(f"Fixture {path} fails verification: {report.violation_count} violation(s)")
            raise FixtureError(f"Fixture for K_{n} fails verification")

        logger.info(f"Loaded fixture for K_{n} from {path}")
        self._cache[n] = decomposition
        return decomposition

    def save(self, decomposition: Decomposition, provenance: dict) -> Path:
        """Write a decomposition with its generating provenance embedded."""
        self.fixtures_dir.mkdir(parents=True, exist_ok=True)
        path = self.path_for(decomposition.n)
        payload = decomposition.model_dump(mode="json")
        payload["provenance"] = provenance
        path.write_text(json.dumps(payload) + "\n", encoding="utf-8")
        self._cache.pop(decomposition.n, None)
        logger.info(f"Wrote fixture for K_{decomposition.n} to {path}")
        return path
