"""
Ring: Domain (Shared Utilities)

Responsibility:
Issues identifiers for stored sweep records. Graph nodes never use these: node ids are
dense integers fixed by the graph itself.

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from features/, infra/, or root/.
"""

import uuid


def new_id() -> str:
    return str(uuid.uuid4())
