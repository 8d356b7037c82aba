# Copyright 2026 The cvtangle Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Entanglement sharing in multimode Gaussian states."""

from ._core import (
    Error,
    contangle_pure,
    fully_symmetric_pure,
    gaussian_contangle,
    glems_contangle,
    log_negativity,
    monogamy_record,
    monte_carlo,
    partial_transpose,
    partial_transpose_spectrum,
    random_pure,
    residual_contangle,
    symmetric_monogamy_residual,
    symplectic_spectrum,
    three_mode_pure,
    two_mode_squeezed,
    vacuum,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
