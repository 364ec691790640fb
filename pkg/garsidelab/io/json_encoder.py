import json
from typing import Any

from ..braid import Braid, from_factors
from ..curves import StandardCurve
from ..family.matrix import FamilyElement
from ..simple import SimpleBraid, simple_from_word
from ..types import JSONBraid


def braid_to_json(x: Braid) -> JSONBraid:
    return {"n": x.n, "inf": x.inf, "factors": [list(f.word()) for f in x.factors]}


def braid_from_json(data: JSONBraid) -> Braid:
    """Rebuild a braid written by ``braid_to_json`` (renormalizing the factors)."""
    try:
        n, inf, words = data["n"], data["inf"], data["factors"]
    except KeyError as error:
        raise ValueError(f"braid JSON is missing {error}") from error
    factors = [simple_from_word(int(n), word) for word in words]  # type: ignore
    return from_factors(int(n), int(inf), factors)  # type: ignore


class GarsideJSONEncoder(json.JSONEncoder):
    """JSON encoder for the package's value types.

    Example::

        import json
        from garsidelab.braid import normal_form
        from garsidelab.io.json_encoder import GarsideJSONEncoder

        json.dumps(normal_form(3, [1, 2]), cls=GarsideJSONEncoder)
    """

    def default(self, o: Any) -> Any:
        if isinstance(o, Braid):
            return braid_to_json(o)
        if isinstance(o, SimpleBraid):
            return {"n": o.n, "pi": list(o.pi), "word": list(o.word())}
        if isinstance(o, FamilyElement):
            return {
                "rows": ["".join(str(v) for v in row) for row in o.rows],
                "b": o.b,
                "side": o.side,
            }
        if isinstance(o, StandardCurve):
            return [o.lo, o.hi]
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        return super().default(o)


def dumps(obj: Any, **kwargs) -> str:
    return json.dumps(obj, cls=GarsideJSONEncoder, **kwargs)
