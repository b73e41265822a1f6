#  Copyright 2026 homogeneous-taylor contributors.
