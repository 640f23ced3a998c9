# Copyright 2026 The land-select Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Feature selection by HSIC Lasso over Nystrom-approximated kernels.

Arrays use the usual convention of observations as rows: ``x`` has shape
``(n, d)`` and ``y`` has shape ``(n,)``. Integer-valued targets with few
distinct values are treated as class labels unless ``task`` says otherwise.
"""

try:
    from ._core import (
        IoError,
        ParseError,
        ValidationError,
        auc,
        independence_rate,
        nhsic_matrix,
        screen,
        select,
        synth,
    )
except ImportError:  # development layout: extension built outside the package
    from _core import (
        IoError,
        ParseError,
        ValidationError,
        auc,
        independence_rate,
        nhsic_matrix,
        screen,
        select,
        synth,
    )

__all__ = [
    "IoError",
    "ParseError",
    "ValidationError",
    "auc",
    "independence_rate",
    "nhsic_matrix",
    "screen",
    "select",
    "synth",
]
