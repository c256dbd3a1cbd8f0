# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""A set of utilities used throughout occupancy-schur
"""

import logging
import sys

import numpy as np

LOG = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


def exception_wrapper(mapping):
    def decorator(f):
        def wrapped(*args, **kwargs):
            try:
                return f(*args, **kwargs)
            except Exception:
                exc_type, exc_value, exc_tb = sys.exc_info()
                new_type = None
                for src_type in mapping:
                    if issubclass(exc_type, src_type):
                        new_type = mapping[src_type]
                        break

                if new_type is None:
                    raise
                raise new_type(str(exc_value)).with_traceback(exc_tb)

        wrapped.__name__ = f.__name__
        wrapped.__doc__ = f.__doc__
        return wrapped

    return decorator


def mix64(seed, index):
    """Derive a 64-bit substream seed from ``(seed, index)``.

    This is the SplitMix64 output function applied to
    ``seed + (index + 1) * 0x9E3779B97F4A7C15`` modulo 2**64, so distinct
    shard indices give well separated seeds and the mapping does not depend
    on how many threads later consume the substreams.
    """
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def make_rng(seed):
    """Return an owned numpy Generator for ``seed``.

    A Generator passes through unchanged so callers may hand either.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def substream(seed, index):
    return make_rng(mix64(seed, index))


def log_fatal_exceptions(func):
    def wrapped(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Exception:
            LOG.exception("Fatal Exception")
            raise

    return wrapped
