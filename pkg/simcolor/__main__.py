#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Allow user to run simcolor as a module."""

# Execute with:
# $ python -m simcolor

import simcolor

if __name__ == '__main__':
    simcolor.main()
