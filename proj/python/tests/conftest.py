import os
import sys

# ctest points BCX_STAGED at the package built in the CMake tree. An editable
# install registers an import hook that would otherwise shadow it.
staged = os.environ.get("BCX_STAGED")
if staged:
    sys.meta_path[:] = [f for f in sys.meta_path if not type(f).__module__.startswith("_editable_skbc_")]
    sys.path.insert(0, staged)
