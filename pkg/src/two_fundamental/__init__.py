# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""2-fundamental groups of graphs: homotopy, coverings, presentations and homology."""

__version__ = "0.1.1"


def main():
    """Run the command-line interface"""
    from two_fundamental.cli import main as cli_main

    cli_main()
