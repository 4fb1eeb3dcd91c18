"""Golden hashes of canonical JSON dumps.

The element schema promises a deterministic lexicographic term order, so
the canonical dump of a fixed generator is reproducible byte for byte;
these hashes pin the wire format against accidental drift.  If a hash
moves on purpose (schema change), recompute and update it here.
"""

import hashlib
import json

from awbi.extension import generator
from awbi.osp_engine import BI
from awbi.uq_engine import AW

GOLDEN = {
    ("aw", (1, 2), 2):
        "fdedc6d910b538312bc94353f216a9d24dbe44f9dc84d363afdf7b566c449401",
    ("aw", (1, 3), 3):
        "fa32436243cb5a8927e607d61fb6066f106eca4e52d20f973bc229f9c8fd0f3d",
    ("bi", (1, 2), 2):
        "c4cfcefd980d057ede01035d559ca4e257b540097767669222dfd52303d688c5",
}


def _digest(backend, elems, n):
    g = generator(backend, n, elems)
    blob = json.dumps(g.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def test_golden_json_digests():
    backends = {"aw": AW, "bi": BI}
    for (name, elems, n), expected in GOLDEN.items():
        assert _digest(backends[name], elems, n) == expected, (name, elems)
