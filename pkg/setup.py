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


from setuptools import setup

classifiers = """\
Development Status :: 4 - Beta
Intended Audience :: Science/Research
License :: OSI Approved :: Apache Software License
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Operating System :: OS Independent
"""

setup(
    name="occupancy-schur",
    use_scm_version={"fallback_version": "0.1.0"},
    author="The occupancy-schur Authors",
    description="Occupancy distributions and Schur-concavity checks for balls in boxes",
    keywords=["occupancy", "majorization", "schur-concave", "balls-in-bins"],
    platforms=["any"],
    classifiers=list(filter(None, classifiers.split("\n"))),
    install_requires=[
        "importlib_metadata>=0.6",
        "autocommand",
        "numpy>=1.17",
        "scipy>=1.4",
    ],
    packages=["occupancy_schur", "occupancy_schur.backends"],
    package_data={"occupancy_schur": ["config.json"]},
    entry_points={
        "console_scripts": [
            "occupancy-schur = occupancy_schur.cli:main",
            "occupancy-schur-acceptance = occupancy_schur.acceptance:run",
        ]
    },
    extras_require={"testing": ["hypothesis", "importlib_resources"]},
    setup_requires=[
        "setuptools_scm>=6",
    ],
    python_requires=">=3.7",
)
