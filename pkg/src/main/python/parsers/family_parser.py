"""Parser for the textual family specifications used on the command line."""
import logging
from typing import List

from ..interfaces.errors import FamilySpecError
from ..interfaces.harness_interfaces import GraphSourceInterface
from ..models.domain_models import FamilyKind, FamilySpec, NamedGraph
from ..services.families import generate, validate_spec

_KINDS = {kind.value: kind for kind in FamilyKind}


def parse_family_spec(text: str) -> FamilySpec:
    """Parse text such as ``"path:10"``, ``"petersen"`` or ``"complement:path:8"``."""
    raw = text
    text = text.strip().lower()
    if not text:
        raise FamilySpecError(raw, "empty family specification")
    head, _, rest = text.partition(":")
    kind = _KINDS.get(head)
    if kind is None:
        raise FamilySpecError(raw, f"unknown family {head!r}")
    if kind == FamilyKind.COMPLEMENT:
        if not rest:
            raise FamilySpecError(raw, "complement needs an inner family")
        spec = FamilySpec(kind, (), parse_family_spec(rest))
    else:
        params = []
        for part in rest.split(":") if rest else []:
            try:
                params.append(int(part))
            except ValueError:
                raise FamilySpecError(raw, f"parameter {part!r} is not an integer") from None
        spec = FamilySpec(kind, tuple(params))
    validate_spec(spec)
    return spec


class FamilySpecSource(GraphSourceInterface):
    """Turns family specifications into graphs."""

    def __init__(self):
        """Initialize the family source."""
        self.logger = logging.getLogger(__name__)

    def supports(self, token: str) -> bool:
        return token.strip().lower().partition(":")[0] in _KINDS

    def load(self, token: str) -> List[NamedGraph]:
        spec = parse_family_spec(token)
        self.logger.debug(f"Generating family {spec.to_text()}")
        return [NamedGraph(spec.to_text(), generate(spec))]
