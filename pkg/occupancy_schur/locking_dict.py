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

import threading


class LockingDict:
    """A dict guarded by a lock; Monte Carlo shard workers deposit their
    counts here keyed by shard index."""

    def __init__(self):

        self.dict = {}
        self.lock = threading.Lock()

    def __enter__(self):
        self.acquire_lock()
        return self

    def __exit__(self, type, value, traceback):
        self.release_lock()

    def get_dict(self):
        return self.dict

    def acquire_lock(self):
        self.lock.acquire()

    def release_lock(self):
        self.lock.release()

    def put(self, key, value):
        with self:
            if key in self.dict:
                raise KeyError("%r was already recorded" % (key,))
            self.dict[key] = value

    def ordered_values(self):
        """Values sorted by key, so merges follow a fixed reduction order."""
        with self:
            return [self.dict[key] for key in sorted(self.dict)]
