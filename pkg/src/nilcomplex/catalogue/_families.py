"""Parametric J-family data: entry formulas, dependent definitions, free parameters.

Machine-generated expression strings (see expr.py for the grammar); do not
hand-edit entries without re-running the integrability sweep.
"""
FAMILY_SRC = {
  'g63_case1': {
    'params': ['j11', 'j12', 'j13', 'j16', 'j26', 'j36', 'j45', 'j46', 'j52', 'j53', 'j55', 'j56'],
    'defs': [
    ],
    'entries': [
      ['j11',
       'j12',
       'j13',
       'j36',
       '- j26',
       'j16'],
      ['( j56 * j26 ^ 2 + j55 * j26 * j16 - j46 * j36 * j26 - j45 * j36 * j16 + j26 * j16 * j11 ) / j16 ^ 2',
       '( - j56 * j26 - j55 * j16 + j26 * j12 ) / j16',
       '( j46 * j26 + j45 * j16 + j26 * j13 ) / j16',
       'j36 * j26 / j16',
       '- j26 ^ 2 / j16',
       'j26'],
      ['( j56 ^ 2 * j26 ^ 3 + 2 * j56 * j55 * j26 ^ 2 * j16 - j56 * j46 * j36 * j26 ^ 2 - j56 * j45 * j36 * j26 * j16 + j55 ^ 2 * j26 * j16 ^ 2 - j55 * j46 * j36 * j26 * j16 - j55 * j45 * j36 * j16 ^ 2 + j46 * j36 * j26 * j16 * j11 + j45 * j36 * j16 ^ 2 * j11 + j26 * j16 ^ 2 ) / ( j16 ^ 2 * ( j46 * j26 + j45 * j16 ) )',
       '( - j56 ^ 2 * j26 ^ 2 - 2 * j56 * j55 * j26 * j16 - j55 ^ 2 * j16 ^ 2 + j46 * j36 * j26 * j12 + j45 * j36 * j16 * j12 - j16 ^ 2 ) / ( j16 * ( j46 * j26 + j45 * j16 ) )',
       '( j56 * j26 + j55 * j16 + j36 * j13 ) / j16',
       'j36 ^ 2 / j16',
       '- j36 * j26 / j16',
       'j36'],
      ['( - j56 ^ 3 * j45 * j26 ^ 2 * j16 - j56 ^ 3 * j26 ^ 3 * j13 + j56 ^ 2 * j55 * j46 * j26 ^ 2 * j16 - 2 * j56 ^ 2 * j55 * j45 * j26 * j16 ^ 2 - 2 * j56 ^ 2 * j55 * j26 ^ 2 * j16 * j13 + j56 ^ 2 * j53 * j26 ^ 3 * j16 + 2 * j56 ^ 2 * j46 * j36 * j26 ^ 2 * j13 + j56 ^ 2 * j46 * j26 ^ 2 * j16 * j11 + 2 * j56 ^ 2 * j45 * j36 * j26 * j16 * j13 + 2 * j56 * j55 ^ 2 * j46 * j26 * j16 ^ 2 - j56 * j55 ^ 2 * j45 * j16 ^ 3 - j56 * j55 ^ 2 * j26 * j16 ^ 2 * j13 + 2 * j56 * j55 * j53 * j26 ^ 2 * j16 ^ 2 + 2 * j56 * j55 * j46 * j36 * j26 * j16 * j13 + 2 * j56 * j55 * j46 * j26 * j16 ^ 2 * j11 + 2 * j56 * j55 * j45 * j36 * j16 ^ 2 * j13 - 2 * j56 * j53 * j46 * j36 * j26 ^ 2 * j16 - 2 * j56 * j53 * j45 * j36 * j26 * j16 ^ 2 + j56 * j46 ^ 2 * j36 * j26 ^ 2 * j12 + 2 * j56 * j46 * j45 * j36 * j26 * j16 * j12 + j56 * j45 ^ 2 * j36 * j16 ^ 2 * j12 - j56 * j45 * j16 ^ 3 - j56 * j26 * j16 ^ 2 * j13 + j55 ^ 3 * j46 * j16 ^ 3 + j55 ^ 2 * j53 * j26 * j16 ^ 3 + j55 ^ 2 * j46 * j16 ^ 3 * j11 - 2 * j55 * j53 * j46 * j36 * j26 * j16 ^ 2 - 2 * j55 * j53 * j45 * j36 * j16 ^ 3 + j55 * j46 * j16 ^ 3 + j53 * j26 * j16 ^ 3 - j52 * j46 ^ 2 * j36 * j26 ^ 2 * j16 - 2 * j52 * j46 * j45 * j36 * j26 * j16 ^ 2 - j52 * j45 ^ 2 * j36 * j16 ^ 3 + j46 * j16 ^ 3 * j11 ) / ( j16 ^ 2 * ( ( j56 * j26 + j55 * j16 ) ^ 2 + j16 ^ 2 ) )',
       '( j56 * j13 - j53 * j16 + j46 * j12 ) / j16',
       '( - j56 ^ 2 * j46 * j26 ^ 2 * j13 - 2 * j56 ^ 2 * j45 * j26 * j16 * j13 - 2 * j56 * j55 * j45 * j16 ^ 2 * j13 + 2 * j56 * j53 * j46 * j26 ^ 2 * j16 + 2 * j56 * j53 * j45 * j26 * j16 ^ 2 - j56 * j46 ^ 2 * j26 ^ 2 * j12 - 2 * j56 * j46 * j45 * j26 * j16 * j12 - j56 * j45 ^ 2 * j16 ^ 2 * j12 + j55 ^ 2 * j46 * j16 ^ 2 * j13 + 2 * j55 * j53 * j46 * j26 * j16 ^ 2 + 2 * j55 * j53 * j45 * j16 ^ 3 + j52 * j46 ^ 2 * j26 ^ 2 * j16 + 2 * j52 * j46 * j45 * j26 * j16 ^ 2 + j52 * j45 ^ 2 * j16 ^ 3 + j46 * j16 ^ 2 * j13 ) / ( j16 * ( ( j56 * j26 + j55 * j16 ) ^ 2 + j16 ^ 2 ) )',
       '( - j56 * j26 - j55 * j16 + j46 * j36 ) / j16',
       'j45',
       'j46'],
      ['( - j56 ^ 2 * j46 * j45 * j26 ^ 2 * j16 - j56 ^ 2 * j45 ^ 2 * j26 * j16 ^ 2 + j56 * j55 * j46 ^ 2 * j26 ^ 2 * j16 - j56 * j55 * j45 ^ 2 * j16 ^ 3 + j56 * j46 ^ 2 * j36 * j26 ^ 2 * j13 + j56 * j46 ^ 2 * j26 ^ 3 * j12 + j56 * j46 ^ 2 * j26 ^ 2 * j16 * j11 + 2 * j56 * j46 * j45 * j36 * j26 * j16 * j13 + 2 * j56 * j46 * j45 * j26 ^ 2 * j16 * j12 + 2 * j56 * j46 * j45 * j26 * j16 ^ 2 * j11 + j56 * j45 ^ 2 * j36 * j16 ^ 2 * j13 + j56 * j45 ^ 2 * j26 * j16 ^ 2 * j12 + j56 * j45 ^ 2 * j16 ^ 3 * j11 + j55 ^ 2 * j46 ^ 2 * j26 * j16 ^ 2 + j55 ^ 2 * j46 * j45 * j16 ^ 3 - j53 * j46 ^ 2 * j36 * j26 ^ 2 * j16 - 2 * j53 * j46 * j45 * j36 * j26 * j16 ^ 2 - j53 * j45 ^ 2 * j36 * j16 ^ 3 - j52 * j46 ^ 2 * j26 ^ 3 * j16 - 2 * j52 * j46 * j45 * j26 ^ 2 * j16 ^ 2 - j52 * j45 ^ 2 * j26 * j16 ^ 3 + j46 ^ 2 * j26 * j16 ^ 2 + j46 * j45 * j16 ^ 3 ) / ( j16 ^ 2 * ( j46 * j26 + j45 * j16 ) ^ 2 )',
       'j52',
       'j53',
       '( - j56 ^ 2 * j26 ^ 2 - 2 * j56 * j55 * j26 * j16 + j56 * j46 * j36 * j26 + j56 * j45 * j36 * j16 - j55 ^ 2 * j16 ^ 2 - j16 ^ 2 ) / ( j16 * ( j46 * j26 + j45 * j16 ) )',
       'j55',
       'j56'],
      ['( - j56 ^ 4 * j45 * j26 ^ 4 * j16 - j56 ^ 4 * j26 ^ 5 * j13 + j56 ^ 3 * j55 * j46 * j26 ^ 4 * j16 - 3 * j56 ^ 3 * j55 * j45 * j26 ^ 3 * j16 ^ 2 - 4 * j56 ^ 3 * j55 * j26 ^ 4 * j16 * j13 + j56 ^ 3 * j46 * j45 * j36 * j26 ^ 3 * j16 + 3 * j56 ^ 3 * j46 * j36 * j26 ^ 4 * j13 + j56 ^ 3 * j46 * j26 ^ 4 * j16 * j11 + j56 ^ 3 * j45 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 + 3 * j56 ^ 3 * j45 * j36 * j26 ^ 3 * j16 * j13 + j56 ^ 3 * j45 * j26 ^ 3 * j16 ^ 2 * j11 + 3 * j56 ^ 2 * j55 ^ 2 * j46 * j26 ^ 3 * j16 ^ 2 - 3 * j56 ^ 2 * j55 ^ 2 * j45 * j26 ^ 2 * j16 ^ 3 - 6 * j56 ^ 2 * j55 ^ 2 * j26 ^ 3 * j16 ^ 2 * j13 - j56 ^ 2 * j55 * j46 ^ 2 * j36 * j26 ^ 3 * j16 + j56 ^ 2 * j55 * j46 * j45 * j36 * j26 ^ 2 * j16 ^ 2 + 7 * j56 ^ 2 * j55 * j46 * j36 * j26 ^ 3 * j16 * j13 - j56 ^ 2 * j55 * j46 * j26 ^ 4 * j16 * j12 + 2 * j56 ^ 2 * j55 * j46 * j26 ^ 3 * j16 ^ 2 * j11 + 2 * j56 ^ 2 * j55 * j45 ^ 2 * j36 * j26 * j16 ^ 3 + 7 * j56 ^ 2 * j55 * j45 * j36 * j26 ^ 2 * j16 ^ 2 * j13 - j56 ^ 2 * j55 * j45 * j26 ^ 3 * j16 ^ 2 * j12 + 2 * j56 ^ 2 * j55 * j45 * j26 ^ 2 * j16 ^ 3 * j11 - 2 * j56 ^ 2 * j53 * j46 * j36 * j26 ^ 4 * j16 - 2 * j56 ^ 2 * j53 * j45 * j36 * j26 ^ 3 * j16 ^ 2 - j56 ^ 2 * j52 * j46 * j26 ^ 5 * j16 - j56 ^ 2 * j52 * j45 * j26 ^ 4 * j16 ^ 2 - 2 * j56 ^ 2 * j46 ^ 2 * j36 ^ 2 * j26 ^ 3 * j13 + j56 ^ 2 * j46 ^ 2 * j36 * j26 ^ 4 * j12 - j56 ^ 2 * j46 ^ 2 * j36 * j26 ^ 3 * j16 * j11 - 4 * j56 ^ 2 * j46 * j45 * j36 ^ 2 * j26 ^ 2 * j16 * j13 + 2 * j56 ^ 2 * j46 * j45 * j36 * j26 ^ 3 * j16 * j12 - j56 ^ 2 * j46 * j45 * j36 * j26 ^ 2 * j16 ^ 2 * j11 - j56 ^ 2 * j46 * j36 * j26 ^ 3 * j16 * j13 * j11 - j56 ^ 2 * j46 * j26 ^ 4 * j16 * j12 * j11 - j56 ^ 2 * j46 * j26 ^ 3 * j16 ^ 2 * j11 ^ 2 - 2 * j56 ^ 2 * j45 ^ 2 * j36 ^ 2 * j26 * j16 ^ 2 * j13 + j56 ^ 2 * j45 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 * j12 - j56 ^ 2 * j45 * j36 * j26 ^ 2 * j16 ^ 2 * j13 * j11 - j56 ^ 2 * j45 * j26 ^ 3 * j16 ^ 2 * j12 * j11 - j56 ^ 2 * j45 * j26 ^ 2 * j16 ^ 3 * j11 ^ 2 - 2 * j56 ^ 2 * j45 * j26 ^ 2 * j16 ^ 3 - 2 * j56 ^ 2 * j26 ^ 3 * j16 ^ 2 * j13 + 3 * j56 * j55 ^ 3 * j46 * j26 ^ 2 * j16 ^ 3 - j56 * j55 ^ 3 * j45 * j26 * j16 ^ 4 - 4 * j56 * j55 ^ 3 * j26 ^ 2 * j16 ^ 3 * j13 - 2 * j56 * j55 ^ 2 * j46 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 - j56 * j55 ^ 2 * j46 * j45 * j36 * j26 * j16 ^ 3 + 5 * j56 * j55 ^ 2 * j46 * j36 * j26 ^ 2 * j16 ^ 2 * j13 - 2 * j56 * j55 ^ 2 * j46 * j26 ^ 3 * j16 ^ 2 * j12 + j56 * j55 ^ 2 * j46 * j26 ^ 2 * j16 ^ 3 * j11 + j56 * j55 ^ 2 * j45 ^ 2 * j36 * j16 ^ 4 + 5 * j56 * j55 ^ 2 * j45 * j36 * j26 * j16 ^ 3 * j13 - 2 * j56 * j55 ^ 2 * j45 * j26 ^ 2 * j16 ^ 3 * j12 + j56 * j55 ^ 2 * j45 * j26 * j16 ^ 4 * j11 - 4 * j56 * j55 * j53 * j46 * j36 * j26 ^ 3 * j16 ^ 2 - 4 * j56 * j55 * j53 * j45 * j36 * j26 ^ 2 * j16 ^ 3 - 2 * j56 * j55 * j52 * j46 * j26 ^ 4 * j16 ^ 2 - 2 * j56 * j55 * j52 * j45 * j26 ^ 3 * j16 ^ 3 - 2 * j56 * j55 * j46 ^ 2 * j36 ^ 2 * j26 ^ 2 * j16 * j13 + 2 * j56 * j55 * j46 ^ 2 * j36 * j26 ^ 3 * j16 * j12 - 2 * j56 * j55 * j46 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 * j11 - 4 * j56 * j55 * j46 * j45 * j36 ^ 2 * j26 * j16 ^ 2 * j13 + 4 * j56 * j55 * j46 * j45 * j36 * j26 ^ 2 * j16 ^ 2 * j12 - 2 * j56 * j55 * j46 * j45 * j36 * j26 * j16 ^ 3 * j11 - 2 * j56 * j55 * j46 * j36 * j26 ^ 2 * j16 ^ 2 * j13 * j11 - 2 * j56 * j55 * j46 * j26 ^ 3 * j16 ^ 2 * j12 * j11 - 2 * j56 * j55 * j46 * j26 ^ 2 * j16 ^ 3 * j11 ^ 2 + j56 * j55 * j46 * j26 ^ 2 * j16 ^ 3 - 2 * j56 * j55 * j45 ^ 2 * j36 ^ 2 * j16 ^ 3 * j13 + 2 * j56 * j55 * j45 ^ 2 * j36 * j26 * j16 ^ 3 * j12 - 2 * j56 * j55 * j45 * j36 * j26 * j16 ^ 3 * j13 * j11 - 2 * j56 * j55 * j45 * j26 ^ 2 * j16 ^ 3 * j12 * j11 - 2 * j56 * j55 * j45 * j26 * j16 ^ 4 * j11 ^ 2 - 3 * j56 * j55 * j45 * j26 * j16 ^ 4 - 4 * j56 * j55 * j26 ^ 2 * j16 ^ 3 * j13 + 2 * j56 * j53 * j46 ^ 2 * j36 ^ 2 * j26 ^ 3 * j16 + 4 * j56 * j53 * j46 * j45 * j36 ^ 2 * j26 ^ 2 * j16 ^ 2 + 2 * j56 * j53 * j45 ^ 2 * j36 ^ 2 * j26 * j16 ^ 3 - j56 * j46 ^ 3 * j36 ^ 2 * j26 ^ 3 * j12 - 3 * j56 * j46 ^ 2 * j45 * j36 ^ 2 * j26 ^ 2 * j16 * j12 - 3 * j56 * j46 * j45 ^ 2 * j36 ^ 2 * j26 * j16 ^ 2 * j12 + j56 * j46 * j45 * j36 * j26 * j16 ^ 3 + 3 * j56 * j46 * j36 * j26 ^ 2 * j16 ^ 2 * j13 + j56 * j46 * j26 ^ 2 * j16 ^ 3 * j11 - j56 * j45 ^ 3 * j36 ^ 2 * j16 ^ 3 * j12 + j56 * j45 ^ 2 * j36 * j16 ^ 4 + 3 * j56 * j45 * j36 * j26 * j16 ^ 3 * j13 + j56 * j45 * j26 * j16 ^ 4 * j11 + j55 ^ 4 * j46 * j26 * j16 ^ 4 - j55 ^ 4 * j26 * j16 ^ 4 * j13 - j55 ^ 3 * j46 ^ 2 * j36 * j26 * j16 ^ 3 - j55 ^ 3 * j46 * j45 * j36 * j16 ^ 4 + j55 ^ 3 * j46 * j36 * j26 * j16 ^ 3 * j13 - j55 ^ 3 * j46 * j26 ^ 2 * j16 ^ 3 * j12 + j55 ^ 3 * j45 * j36 * j16 ^ 4 * j13 - j55 ^ 3 * j45 * j26 * j16 ^ 4 * j12 - 2 * j55 ^ 2 * j53 * j46 * j36 * j26 ^ 2 * j16 ^ 3 - 2 * j55 ^ 2 * j53 * j45 * j36 * j26 * j16 ^ 4 - j55 ^ 2 * j52 * j46 * j26 ^ 3 * j16 ^ 3 - j55 ^ 2 * j52 * j45 * j26 ^ 2 * j16 ^ 4 + j55 ^ 2 * j46 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 * j12 - j55 ^ 2 * j46 ^ 2 * j36 * j26 * j16 ^ 3 * j11 + 2 * j55 ^ 2 * j46 * j45 * j36 * j26 * j16 ^ 3 * j12 - j55 ^ 2 * j46 * j45 * j36 * j16 ^ 4 * j11 - j55 ^ 2 * j46 * j36 * j26 * j16 ^ 3 * j13 * j11 - j55 ^ 2 * j46 * j26 ^ 2 * j16 ^ 3 * j12 * j11 - j55 ^ 2 * j46 * j26 * j16 ^ 4 * j11 ^ 2 + j55 ^ 2 * j46 * j26 * j16 ^ 4 + j55 ^ 2 * j45 ^ 2 * j36 * j16 ^ 4 * j12 - j55 ^ 2 * j45 * j36 * j16 ^ 4 * j13 * j11 - j55 ^ 2 * j45 * j26 * j16 ^ 4 * j12 * j11 - j55 ^ 2 * j45 * j16 ^ 5 * j11 ^ 2 - j55 ^ 2 * j45 * j16 ^ 5 - 2 * j55 ^ 2 * j26 * j16 ^ 4 * j13 + 2 * j55 * j53 * j46 ^ 2 * j36 ^ 2 * j26 ^ 2 * j16 ^ 2 + 4 * j55 * j53 * j46 * j45 * j36 ^ 2 * j26 * j16 ^ 3 + 2 * j55 * j53 * j45 ^ 2 * j36 ^ 2 * j16 ^ 4 - j55 * j46 ^ 2 * j36 * j26 * j16 ^ 3 - j55 * j46 * j45 * j36 * j16 ^ 4 + j55 * j46 * j36 * j26 * j16 ^ 3 * j13 - j55 * j46 * j26 ^ 2 * j16 ^ 3 * j12 + j55 * j45 * j36 * j16 ^ 4 * j13 - j55 * j45 * j26 * j16 ^ 4 * j12 - 2 * j53 * j46 * j36 * j26 ^ 2 * j16 ^ 3 - 2 * j53 * j45 * j36 * j26 * j16 ^ 4 + j52 * j46 ^ 3 * j36 ^ 2 * j26 ^ 3 * j16 + 3 * j52 * j46 ^ 2 * j45 * j36 ^ 2 * j26 ^ 2 * j16 ^ 2 + 3 * j52 * j46 * j45 ^ 2 * j36 ^ 2 * j26 * j16 ^ 3 - j52 * j46 * j26 ^ 3 * j16 ^ 3 + j52 * j45 ^ 3 * j36 ^ 2 * j16 ^ 4 - j52 * j45 * j26 ^ 2 * j16 ^ 4 + j46 ^ 2 * j36 * j26 ^ 2 * j16 ^ 2 * j12 - j46 ^ 2 * j36 * j26 * j16 ^ 3 * j11 + 2 * j46 * j45 * j36 * j26 * j16 ^ 3 * j12 - j46 * j45 * j36 * j16 ^ 4 * j11 - j46 * j36 * j26 * j16 ^ 3 * j13 * j11 - j46 * j26 ^ 2 * j16 ^ 3 * j12 * j11 - j46 * j26 * j16 ^ 4 * j11 ^ 2 + j45 ^ 2 * j36 * j16 ^ 4 * j12 - j45 * j36 * j16 ^ 4 * j13 * j11 - j45 * j26 * j16 ^ 4 * j12 * j11 - j45 * j16 ^ 5 * j11 ^ 2 - j45 * j16 ^ 5 - j26 * j16 ^ 4 * j13 ) / ( j16 ^ 3 * ( j46 * j26 + j45 * j16 ) * ( ( j56 * j26 + j55 * j16 ) ^ 2 + j16 ^ 2 ) )',
       '( j56 ^ 2 * j26 ^ 2 * j13 + 2 * j56 * j55 * j26 * j16 * j13 - j56 * j46 * j36 * j26 * j13 + j56 * j46 * j26 ^ 2 * j12 - j56 * j45 * j36 * j16 * j13 + j56 * j45 * j26 * j16 * j12 + j55 ^ 2 * j16 ^ 2 * j13 + j55 * j46 * j26 * j16 * j12 + j55 * j45 * j16 ^ 2 * j12 + j53 * j46 * j36 * j26 * j16 + j53 * j45 * j36 * j16 ^ 2 + j52 * j46 * j26 ^ 2 * j16 + j52 * j45 * j26 * j16 ^ 2 - j46 ^ 2 * j36 * j26 * j12 - j46 * j45 * j36 * j16 * j12 - j46 * j36 * j26 * j13 * j12 - j46 * j26 ^ 2 * j12 ^ 2 - j46 * j26 * j16 * j12 * j11 - j45 * j36 * j16 * j13 * j12 - j45 * j26 * j16 * j12 ^ 2 - j45 * j16 ^ 2 * j12 * j11 + j16 ^ 2 * j13 ) / ( j16 ^ 2 * ( j46 * j26 + j45 * j16 ) )',
       '( - j56 ^ 3 * j26 ^ 3 * j13 - 3 * j56 ^ 2 * j55 * j26 ^ 2 * j16 * j13 + j56 ^ 2 * j53 * j26 ^ 3 * j16 + j56 ^ 2 * j46 * j36 * j26 ^ 2 * j13 - j56 ^ 2 * j46 * j26 ^ 3 * j12 + 2 * j56 ^ 2 * j45 * j36 * j26 * j16 * j13 - j56 ^ 2 * j45 * j26 ^ 2 * j16 * j12 - j56 ^ 2 * j36 * j26 ^ 2 * j13 ^ 2 - j56 ^ 2 * j26 ^ 3 * j13 * j12 - j56 ^ 2 * j26 ^ 2 * j16 * j13 * j11 - 3 * j56 * j55 ^ 2 * j26 * j16 ^ 2 * j13 + 2 * j56 * j55 * j53 * j26 ^ 2 * j16 ^ 2 - 2 * j56 * j55 * j46 * j26 ^ 2 * j16 * j12 + 2 * j56 * j55 * j45 * j36 * j16 ^ 2 * j13 - 2 * j56 * j55 * j45 * j26 * j16 ^ 2 * j12 - 2 * j56 * j55 * j36 * j26 * j16 * j13 ^ 2 - 2 * j56 * j55 * j26 ^ 2 * j16 * j13 * j12 - 2 * j56 * j55 * j26 * j16 ^ 2 * j13 * j11 - 2 * j56 * j53 * j46 * j36 * j26 ^ 2 * j16 - 2 * j56 * j53 * j45 * j36 * j26 * j16 ^ 2 + j56 * j46 ^ 2 * j36 * j26 ^ 2 * j12 + 2 * j56 * j46 * j45 * j36 * j26 * j16 * j12 + j56 * j45 ^ 2 * j36 * j16 ^ 2 * j12 - j56 * j26 * j16 ^ 2 * j13 - j55 ^ 3 * j16 ^ 3 * j13 + j55 ^ 2 * j53 * j26 * j16 ^ 3 - j55 ^ 2 * j46 * j36 * j16 ^ 2 * j13 - j55 ^ 2 * j46 * j26 * j16 ^ 2 * j12 - j55 ^ 2 * j45 * j16 ^ 3 * j12 - j55 ^ 2 * j36 * j16 ^ 2 * j13 ^ 2 - j55 ^ 2 * j26 * j16 ^ 2 * j13 * j12 - j55 ^ 2 * j16 ^ 3 * j13 * j11 - 2 * j55 * j53 * j46 * j36 * j26 * j16 ^ 2 - 2 * j55 * j53 * j45 * j36 * j16 ^ 3 - j55 * j16 ^ 3 * j13 + j53 * j26 * j16 ^ 3 - j52 * j46 ^ 2 * j36 * j26 ^ 2 * j16 - 2 * j52 * j46 * j45 * j36 * j26 * j16 ^ 2 - j52 * j45 ^ 2 * j36 * j16 ^ 3 - j46 * j36 * j16 ^ 2 * j13 - j46 * j26 * j16 ^ 2 * j12 - j45 * j16 ^ 3 * j12 - j36 * j16 ^ 2 * j13 ^ 2 - j26 * j16 ^ 2 * j13 * j12 - j16 ^ 3 * j13 * j11 ) / ( j16 ^ 2 * ( ( j56 * j26 + j55 * j16 ) ^ 2 + j16 ^ 2 ) )',
       '( - j56 ^ 2 * j26 ^ 3 - 2 * j56 * j55 * j26 ^ 2 * j16 + 2 * j56 * j46 * j36 * j26 ^ 2 + 2 * j56 * j45 * j36 * j26 * j16 - j55 ^ 2 * j26 * j16 ^ 2 + j55 * j46 * j36 * j26 * j16 + j55 * j45 * j36 * j16 ^ 2 - j46 ^ 2 * j36 ^ 2 * j26 - j46 * j45 * j36 ^ 2 * j16 - j46 * j36 ^ 2 * j26 * j13 - j46 * j36 * j26 ^ 2 * j12 - j46 * j36 * j26 * j16 * j11 - j45 * j36 ^ 2 * j16 * j13 - j45 * j36 * j26 * j16 * j12 - j45 * j36 * j16 ^ 2 * j11 - j26 * j16 ^ 2 ) / ( j16 ^ 2 * ( j46 * j26 + j45 * j16 ) )',
       '( j55 * j26 * j16 - j45 * j36 * j16 + j36 * j26 * j13 + j26 ^ 2 * j12 + j26 * j16 * j11 ) / j16 ^ 2',
       '( j56 * j26 - j46 * j36 - j36 * j13 - j26 * j12 - j16 * j11 ) / j16'],
    ],
  },
  'g63_case2': {
    'params': ['j21', 'j23', 'j24', 'j25', 'j31', 'j43', 'j45', 'j55', 'j63', 'j65', 'j66'],
    'defs': [
    ],
    'entries': [
      ['- j66',
       '- j24 * ( j66 ^ 2 + 1 ) / ( j21 * j24 + j25 * j31 )',
       '- ( j25 * ( j66 ^ 2 + 1 ) ) / ( j31 * j25 + j24 * j21 )',
       '0',
       '0',
       '0'],
      ['j21',
       '( - j55 * j25 - j45 * j24 + j24 * j23 ) / j25',
       'j23',
       'j24',
       'j25',
       '0'],
      ['j31',
       '( j24 * ( j66 * j25 + j55 * j25 + j45 * j24 - j24 * j23 ) ) / j25 ^ 2',
       '( j66 * j25 - j24 * j23 ) / j25',
       '- j24 ^ 2 / j25',
       '- j24',
       '0'],
      ['( - j65 * j23 + j63 * j25 + j45 * j21 ) / j25',
       '( - j66 ^ 2 * j65 * j25 ^ 2 + j66 * j45 * j31 * j25 ^ 2 + j66 * j45 * j25 * j24 * j21 - j65 * j25 ^ 2 - j55 * j45 * j31 * j25 ^ 2 - j55 * j45 * j25 * j24 * j21 - j45 ^ 2 * j31 * j25 * j24 - j45 ^ 2 * j24 ^ 2 * j21 + j43 * j31 * j25 ^ 2 * j24 + j43 * j25 * j24 ^ 2 * j21 ) / ( j25 ^ 2 * ( j31 * j25 + j24 * j21 ) )',
       'j43',
       '( - j66 * j25 + j45 * j24 ) / j25',
       'j45',
       'j25 * ( j66 ^ 2 + 1 ) / ( j31 * j25 + j24 * j21 )'],
      ['( j66 * j25 * j21 + j65 * j24 * j23 - j63 * j25 * j24 + j55 * j25 * j21 - j31 * j25 * j23 - j24 * j23 * j21 ) / j25 ^ 2',
       '( j66 ^ 2 * j65 * j25 ^ 2 * j24 + j66 ^ 2 * j25 ^ 2 * j24 * j21 - j66 * j45 * j31 * j25 ^ 2 * j24 - j66 * j45 * j25 * j24 ^ 2 * j21 - j66 * j31 * j25 ^ 2 * j24 * j23 - j66 * j25 * j24 ^ 2 * j23 * j21 + j65 * j25 ^ 2 * j24 - j55 ^ 2 * j31 * j25 ^ 3 - j55 ^ 2 * j25 ^ 2 * j24 * j21 - j55 * j45 * j31 * j25 ^ 2 * j24 - j55 * j45 * j25 * j24 ^ 2 * j21 + j55 * j31 * j25 ^ 2 * j24 * j23 + j55 * j25 * j24 ^ 2 * j23 * j21 + j45 * j31 * j25 * j24 ^ 2 * j23 + j45 * j24 ^ 3 * j23 * j21 - j43 * j31 * j25 ^ 2 * j24 ^ 2 - j43 * j25 * j24 ^ 3 * j21 - j31 * j25 ^ 3 ) / ( j25 ^ 3 * ( j31 * j25 + j24 * j21 ) )',
       '( j66 ^ 2 * j25 ^ 2 * j21 - j66 * j31 * j25 ^ 2 * j23 - j66 * j25 * j24 * j23 * j21 + j55 * j31 * j25 ^ 2 * j23 + j55 * j25 * j24 * j23 * j21 + j45 * j31 * j25 * j24 * j23 + j45 * j24 ^ 2 * j23 * j21 - j43 * j31 * j25 ^ 2 * j24 - j43 * j25 * j24 ^ 2 * j21 + j25 ^ 2 * j21 ) / ( j25 ^ 2 * ( j31 * j25 + j24 * j21 ) )',
       'j24 * ( j66 + j55 ) / j25',
       'j55',
       '- j24 * ( j66 ^ 2 + 1 ) / ( j31 * j25 + j24 * j21 )'],
      ['( j66 ^ 2 * j65 * j25 ^ 2 * j21 - 2 * j66 * j65 * j31 * j25 ^ 2 * j23 - 2 * j66 * j65 * j25 * j24 * j23 * j21 + 2 * j66 * j63 * j31 * j25 ^ 3 + 2 * j66 * j63 * j25 ^ 2 * j24 * j21 + j65 * j25 ^ 2 * j21 + j45 * j31 ^ 2 * j25 ^ 2 * j23 + 2 * j45 * j31 * j25 * j24 * j23 * j21 + j45 * j24 ^ 2 * j23 * j21 ^ 2 - j43 * j31 ^ 2 * j25 ^ 3 - 2 * j43 * j31 * j25 ^ 2 * j24 * j21 - j43 * j25 * j24 ^ 2 * j21 ^ 2 ) / ( j25 ^ 3 * ( j66 ^ 2 + 1 ) )',
       '( - j66 * j65 * j25 - j65 * j55 * j25 - j65 * j45 * j24 + j63 * j25 * j24 + j45 * j31 * j25 + j45 * j24 * j21 ) / j25 ^ 2',
       'j63',
       '( j65 * j24 - j31 * j25 - j24 * j21 ) / j25',
       'j65',
       'j66'],
    ],
  },
  'g63_case3': {
    'params': ['j11', 'j12', 'j31', 'j33', 'j34', 'j41', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['j11',
       'j12',
       '0',
       '0',
       '0',
       '0'],
      ['- ( ( j11 ^ 2 + 1 ) / ( j12 ) )',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '( ( j12 * ( j41 * j34 + j33 * j31 + j31 * j11 ) ) / ( j11 ^ 2 + 1 ) )',
       'j33',
       'j34',
       '0',
       '0'],
      ['j41',
       '( ( j12 * ( - j41 * j34 * j33 + j41 * j34 * j11 - j33 ^ 2 * j31 - j31 ) ) / ( j34 * ( j11 ^ 2 + 1 ) ) )',
       '- ( ( j33 ^ 2 + 1 ) / ( j34 ) )',
       '- j33',
       '0',
       '0'],
      ['( ( j64 * j41 * j12 + j63 * j31 * j12 - j62 * j11 ^ 2 - j62 ) / ( j11 ^ 2 + 1 ) )',
       '( j12 * ( - j64 * j41 * j34 * j33 * j12 + j64 * j41 * j34 * j12 * j11 - j64 * j33 ^ 2 * j31 * j12 - j64 * j31 * j12 + j63 * j41 * j34 ^ 2 * j12 + j63 * j34 * j33 * j31 * j12 + j63 * j34 * j31 * j12 * j11 - 2 * j62 * j34 * j11 ^ 3 - 2 * j62 * j34 * j11 + j61 * j34 * j12 * j11 ^ 2 + j61 * j34 * j12 ) ) / ( j34 * ( j11 ^ 2 + 1 ) ^ 2 )',
       '( j12 * ( - j64 * j33 ^ 2 - j64 + j63 * j34 * j33 - j63 * j34 * j11 ) ) / ( j34 * ( j11 ^ 2 + 1 ) )',
       '( ( j12 * ( - j64 * j33 - j64 * j11 + j63 * j34 ) ) / ( j11 ^ 2 + 1 ) )',
       'j11',
       'j12'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '- ( ( j11 ^ 2 + 1 ) / ( j12 ) )',
       '- j11'],
    ],
  },
  'g67': {
    'params': ['j11', 'j12', 'j32', 'j34', 'j42', 'j54', 'j55', 'j61', 'j62', 'j64'],
    'defs': [
      ('c', '( - j55 * j34 + j55 * j12 + j34 * j11 ) / j12'),
    ],
    'entries': [
      ['j11',
       'j12',
       '0',
       '0',
       '0',
       '0'],
      ['- ( ( j11 ^ 2 + 1 ) / ( j12 ) )',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['( j55 * j34 * j32 - j55 * j32 * j12 - j42 * j34 * j12 - j34 * j32 * j11 + j32 * j12 * j11 ) / j12 ^ 2',
       'j32',
       'c',
       'j34',
       '0',
       '0'],
      ['( j55 ^ 2 * j34 ^ 2 * j32 - 2 * j55 ^ 2 * j34 * j32 * j12 + j55 ^ 2 * j32 * j12 ^ 2 - j55 * j42 * j34 ^ 2 * j12 + j55 * j42 * j34 * j12 ^ 2 - 2 * j55 * j34 ^ 2 * j32 * j11 + 2 * j55 * j34 * j32 * j12 * j11 + j42 * j34 ^ 2 * j12 * j11 + j42 * j34 * j12 ^ 2 * j11 + j34 ^ 2 * j32 * j11 ^ 2 + j32 * j12 ^ 2 ) / ( j34 * j12 ^ 3 )',
       'j42',
       '- ( ( c ^ 2 + 1 ) / ( j34 ) )',
       '- c',
       '0',
       '0'],
      ['( - j64 * j55 ^ 2 * j34 ^ 2 * j32 * j12 + j64 * j55 ^ 2 * j34 * j32 * j12 ^ 2 + j64 * j55 * j42 * j34 ^ 2 * j12 ^ 2 + 2 * j64 * j55 * j34 ^ 2 * j32 * j12 * j11 - 2 * j64 * j55 * j34 * j32 * j12 ^ 2 * j11 - j64 * j42 * j34 ^ 2 * j12 ^ 2 * j11 - j64 * j34 ^ 2 * j32 * j12 * j11 ^ 2 - j64 * j34 * j32 * j12 ^ 2 + j62 * j34 ^ 2 * j12 ^ 2 * j11 ^ 2 + j62 * j34 ^ 2 * j12 ^ 2 + j61 * j55 * j34 ^ 2 * j12 ^ 3 - j61 * j34 ^ 2 * j12 ^ 3 * j11 + j55 ^ 3 * j54 * j34 ^ 2 * j32 - 2 * j55 ^ 3 * j54 * j34 * j32 * j12 + j55 ^ 3 * j54 * j32 * j12 ^ 2 - j55 ^ 2 * j54 * j42 * j34 ^ 2 * j12 + j55 ^ 2 * j54 * j42 * j34 * j12 ^ 2 - j55 ^ 2 * j54 * j34 ^ 2 * j32 * j11 + 2 * j55 ^ 2 * j54 * j34 * j32 * j12 * j11 - j55 ^ 2 * j54 * j32 * j12 ^ 2 * j11 + j55 * j54 * j34 ^ 2 * j32 - 2 * j55 * j54 * j34 * j32 * j12 + j55 * j54 * j32 * j12 ^ 2 - j54 * j42 * j34 ^ 2 * j12 + j54 * j42 * j34 * j12 ^ 2 - j54 * j34 ^ 2 * j32 * j11 + 2 * j54 * j34 * j32 * j12 * j11 - j54 * j32 * j12 ^ 2 * j11 ) / ( j34 * j12 ^ 2 * ( j55 ^ 2 + 1 ) * ( j34 - j12 ) )',
       '( j64 * j55 * j34 ^ 2 * j32 - 2 * j64 * j55 * j34 * j32 * j12 - j64 * j42 * j34 ^ 2 * j12 - j64 * j34 ^ 2 * j32 * j11 + j62 * j55 * j34 ^ 2 * j12 + j62 * j34 ^ 2 * j12 * j11 - j61 * j34 ^ 2 * j12 ^ 2 + j55 ^ 2 * j54 * j34 * j32 - j55 ^ 2 * j54 * j32 * j12 + j54 * j34 * j32 - j54 * j32 * j12 ) / ( j34 * ( j55 ^ 2 + 1 ) * ( j34 - j12 ) )',
       '( j64 * j12 ^ 2 - j55 * j54 * j34 + j55 * j54 * j12 + j54 * j34 * j11 - j54 * j12 * j11 ) / ( j12 * ( j34 - j12 ) )',
       'j54',
       'j55',
       '- ( ( j34 * j12 ) / ( j34 - j12 ) )'],
      ['j61',
       'j62',
       '( - j64 * j55 * j34 ^ 2 + 2 * j64 * j55 * j34 * j12 + j64 * j34 ^ 2 * j11 - j55 ^ 2 * j54 * j34 + j55 ^ 2 * j54 * j12 - j54 * j34 + j54 * j12 ) / ( j34 ^ 2 * j12 )',
       'j64',
       '( ( ( j55 ^ 2 + 1 ) * ( j34 - j12 ) ) / ( j34 * j12 ) )',
       '- j55'],
    ],
  },
  'g64': {
    'params': ['j11', 'j12', 'j32', 'j34', 'j42', 'j55', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
      ('b', '( - j55 * j11 + 1 ) / ( j55 + j11 )'),
      ('c', '- j12 * j34 * ( j11 + j55 ) / ( j11 ^ 2 + 1 )'),
    ],
    'entries': [
      ['j11',
       'j12',
       '0',
       '0',
       '0',
       '0'],
      ['- ( ( ( j11 ^ 2 + 1 ) ) / ( j12 ) )',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['( - j55 * j42 * j34 + 2 * j55 * j32 * j11 - j42 * j34 * j11 + j32 * j11 ^ 2 - j32 ) / ( j12 * ( j55 + j11 ) )',
       'j32',
       'b',
       'j34',
       '0',
       '0'],
      ['( j55 ^ 2 * j32 * j11 ^ 2 + j55 ^ 2 * j32 + j55 * j42 * j34 * j11 ^ 2 + j55 * j42 * j34 + j42 * j34 * j11 ^ 3 + j42 * j34 * j11 + j32 * j11 ^ 2 + j32 ) / ( j34 * j12 * ( j55 + j11 ) ^ 2 )',
       'j42',
       '- ( ( b ^ 2 + 1 ) / ( j34 ) )',
       '- b',
       '0',
       '0'],
      ['( j64 * j55 ^ 2 * j32 * j11 ^ 4 + 2 * j64 * j55 ^ 2 * j32 * j11 ^ 2 + j64 * j55 ^ 2 * j32 + j64 * j55 * j42 * j34 * j11 ^ 4 + 2 * j64 * j55 * j42 * j34 * j11 ^ 2 + j64 * j55 * j42 * j34 + j64 * j42 * j34 * j11 ^ 5 + 2 * j64 * j42 * j34 * j11 ^ 3 + j64 * j42 * j34 * j11 + j64 * j32 * j11 ^ 4 + 2 * j64 * j32 * j11 ^ 2 + j64 * j32 - j63 * j55 ^ 2 * j42 * j34 ^ 2 * j11 ^ 2 - j63 * j55 ^ 2 * j42 * j34 ^ 2 + 2 * j63 * j55 ^ 2 * j34 * j32 * j11 ^ 3 + 2 * j63 * j55 ^ 2 * j34 * j32 * j11 - 2 * j63 * j55 * j42 * j34 ^ 2 * j11 ^ 3 - 2 * j63 * j55 * j42 * j34 ^ 2 * j11 + 3 * j63 * j55 * j34 * j32 * j11 ^ 4 + 2 * j63 * j55 * j34 * j32 * j11 ^ 2 - j63 * j55 * j34 * j32 - j63 * j42 * j34 ^ 2 * j11 ^ 4 - j63 * j42 * j34 ^ 2 * j11 ^ 2 + j63 * j34 * j32 * j11 ^ 5 - j63 * j34 * j32 * j11 - j62 * j55 ^ 2 * j34 * j11 ^ 4 - 2 * j62 * j55 ^ 2 * j34 * j11 ^ 2 - j62 * j55 ^ 2 * j34 - 2 * j62 * j55 * j34 * j11 ^ 5 - 4 * j62 * j55 * j34 * j11 ^ 3 - 2 * j62 * j55 * j34 * j11 - j62 * j34 * j11 ^ 6 - 2 * j62 * j34 * j11 ^ 4 - j62 * j34 * j11 ^ 2 - j61 * j55 ^ 3 * j34 * j12 * j11 ^ 2 - j61 * j55 ^ 3 * j34 * j12 - j61 * j55 ^ 2 * j34 * j12 * j11 ^ 3 - j61 * j55 ^ 2 * j34 * j12 * j11 + j61 * j55 * j34 * j12 * j11 ^ 4 + j61 * j55 * j34 * j12 * j11 ^ 2 + j61 * j34 * j12 * j11 ^ 5 + j61 * j34 * j12 * j11 ^ 3 ) / ( j34 ^ 2 * j12 ^ 2 * ( j55 + j11 ) ^ 3 )',
       '( j64 * j42 * j11 ^ 2 + j64 * j42 + j63 * j32 * j11 ^ 2 + j63 * j32 - j62 * j55 * j11 ^ 2 - j62 * j55 - j62 * j11 ^ 3 - j62 * j11 + j61 * j12 * j11 ^ 2 + j61 * j12 ) / ( j34 * j12 * ( j55 + j11 ) )',
       '( - j64 * j55 ^ 2 * j11 ^ 4 - 2 * j64 * j55 ^ 2 * j11 ^ 2 - j64 * j55 ^ 2 - j64 * j11 ^ 4 - 2 * j64 * j11 ^ 2 - j64 - j63 * j55 ^ 3 * j34 * j11 ^ 2 - j63 * j55 ^ 3 * j34 - 3 * j63 * j55 ^ 2 * j34 * j11 ^ 3 - 3 * j63 * j55 ^ 2 * j34 * j11 - 2 * j63 * j55 * j34 * j11 ^ 4 - j63 * j55 * j34 * j11 ^ 2 + j63 * j55 * j34 + j63 * j34 * j11 ^ 3 + j63 * j34 * j11 ) / ( j34 ^ 2 * j12 * ( j55 + j11 ) ^ 3 )',
       '( - j64 * j55 ^ 2 * j11 ^ 2 - j64 * j55 ^ 2 - j64 * j11 ^ 2 - j64 + j63 * j55 * j34 * j11 ^ 2 + j63 * j55 * j34 + j63 * j34 * j11 ^ 3 + j63 * j34 * j11 ) / ( j34 * j12 * ( j55 + j11 ) ^ 2 )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( c ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'c',
       '- j55'],
    ],
  },
  'g61_case1': {
    'params': ['j11', 'j13', 'j21', 'j22', 'j23', 'j24', 'j55', 'j61', 'j62', 'j63', 'j64', 'j65'],
    'defs': [
    ],
    'entries': [
      ['j11',
       '( - ( ( j24 * j23 * j11 - j24 * j21 * j13 - j23 * j22 * j13 - ( j24 - j13 ) * j55 * j23 ) * j65 + ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j21 ) ) / ( j65 * j23 ^ 2 )',
       'j13',
       '( - ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) - j65 * j24 * j13 ) ) / ( j65 * j23 )',
       '0',
       '0'],
      ['j21',
       'j22',
       'j23',
       'j24',
       '0',
       '0'],
      ['( - ( j65 * j55 * j24 ^ 2 * j23 * j21 - j65 * j55 * j24 * j23 * j21 * j13 - j65 * j24 ^ 2 * j23 * j21 * j11 + j65 * j24 ^ 2 * j21 ^ 2 * j13 + j65 * j24 * j23 ^ 2 * j11 ^ 2 + j65 * j24 * j23 ^ 2 - j65 * j24 * j23 * j21 * j13 * j11 - j55 ^ 2 * j24 ^ 2 * j21 ^ 2 + j55 ^ 2 * j24 * j23 * j22 * j21 + j55 ^ 2 * j24 * j23 * j21 * j11 + j55 ^ 2 * j24 * j21 ^ 2 * j13 - j55 ^ 2 * j23 * j22 * j21 * j13 - j55 ^ 2 * j23 * j21 * j13 * j11 - j24 ^ 2 * j21 ^ 2 + j24 * j23 * j22 * j21 + j24 * j23 * j21 * j11 + j24 * j21 ^ 2 * j13 - j23 * j22 * j21 * j13 - j23 * j21 * j13 * j11 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j23 ^ 2 )',
       '( - ( j65 ^ 2 * j55 * j24 ^ 2 * j23 ^ 2 * j22 + j65 ^ 2 * j55 * j24 ^ 2 * j23 ^ 2 * j11 - j65 ^ 2 * j55 * j24 ^ 2 * j23 * j21 * j13 - j65 ^ 2 * j55 * j24 * j23 ^ 2 * j22 * j13 - j65 ^ 2 * j55 * j24 * j23 ^ 2 * j13 * j11 + j65 ^ 2 * j55 * j24 * j23 * j21 * j13 ^ 2 - j65 ^ 2 * j24 ^ 2 * j23 ^ 2 * j22 * j11 - j65 ^ 2 * j24 ^ 2 * j23 ^ 2 * j11 ^ 2 + j65 ^ 2 * j24 ^ 2 * j23 * j22 * j21 * j13 + 2 * j65 ^ 2 * j24 ^ 2 * j23 * j21 * j13 * j11 - j65 ^ 2 * j24 ^ 2 * j21 ^ 2 * j13 ^ 2 + j65 ^ 2 * j24 * j23 ^ 2 * j22 * j13 * j11 - j65 ^ 2 * j24 * j23 ^ 2 * j13 - j65 ^ 2 * j24 * j23 * j22 * j21 * j13 ^ 2 + j65 * j55 ^ 3 * j24 ^ 2 * j23 * j21 - 2 * j65 * j55 ^ 3 * j24 * j23 * j21 * j13 + j65 * j55 ^ 3 * j23 * j21 * j13 ^ 2 - j65 * j55 ^ 2 * j24 ^ 2 * j23 * j22 * j21 - 2 * j65 * j55 ^ 2 * j24 ^ 2 * j23 * j21 * j11 + 2 * j65 * j55 ^ 2 * j24 ^ 2 * j21 ^ 2 * j13 + j65 * j55 ^ 2 * j24 * j23 ^ 2 * j22 ^ 2 + j65 * j55 ^ 2 * j24 * j23 ^ 2 + 2 * j65 * j55 ^ 2 * j24 * j23 * j22 * j21 * j13 + 2 * j65 * j55 ^ 2 * j24 * j23 * j21 * j13 * j11 - 2 * j65 * j55 ^ 2 * j24 * j21 ^ 2 * j13 ^ 2 - j65 * j55 ^ 2 * j23 ^ 2 * j22 ^ 2 * j13 - j65 * j55 ^ 2 * j23 ^ 2 * j13 - j65 * j55 ^ 2 * j23 * j22 * j21 * j13 ^ 2 + j65 * j55 * j24 ^ 2 * j23 * j21 - 2 * j65 * j55 * j24 * j23 * j21 * j13 + j65 * j55 * j23 * j21 * j13 ^ 2 - j65 * j24 ^ 2 * j23 * j22 * j21 - 2 * j65 * j24 ^ 2 * j23 * j21 * j11 + 2 * j65 * j24 ^ 2 * j21 ^ 2 * j13 + j65 * j24 * j23 ^ 2 * j22 ^ 2 + j65 * j24 * j23 ^ 2 + 2 * j65 * j24 * j23 * j22 * j21 * j13 + 2 * j65 * j24 * j23 * j21 * j13 * j11 - 2 * j65 * j24 * j21 ^ 2 * j13 ^ 2 - j65 * j23 ^ 2 * j22 ^ 2 * j13 - j65 * j23 ^ 2 * j13 - j65 * j23 * j22 * j21 * j13 ^ 2 - j55 ^ 4 * j24 ^ 2 * j21 ^ 2 + 2 * j55 ^ 4 * j24 * j21 ^ 2 * j13 - j55 ^ 4 * j21 ^ 2 * j13 ^ 2 - 2 * j55 ^ 2 * j24 ^ 2 * j21 ^ 2 + 4 * j55 ^ 2 * j24 * j21 ^ 2 * j13 - 2 * j55 ^ 2 * j21 ^ 2 * j13 ^ 2 - j24 ^ 2 * j21 ^ 2 + 2 * j24 * j21 ^ 2 * j13 - j21 ^ 2 * j13 ^ 2 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j65 * j23 ^ 3 )',
       '( - ( j65 * j55 * j24 * j23 - j65 * j24 * j23 * j11 + j65 * j24 * j21 * j13 - j55 ^ 2 * j24 * j21 + j55 ^ 2 * j23 * j22 + j55 ^ 2 * j21 * j13 - j24 * j21 + j23 * j22 + j21 * j13 ) ) / ( ( j55 ^ 2 + 1 ) * j23 )',
       '( - ( j65 ^ 2 * j55 * j24 ^ 2 * j23 - j65 ^ 2 * j24 ^ 2 * j23 * j11 + j65 ^ 2 * j24 ^ 2 * j21 * j13 - j65 * j55 ^ 2 * j24 ^ 2 * j21 + j65 * j55 ^ 2 * j24 * j23 * j22 - j65 * j55 ^ 2 * j24 * j23 * j11 + 2 * j65 * j55 ^ 2 * j24 * j21 * j13 - j65 * j24 ^ 2 * j21 + j65 * j24 * j23 * j22 - j65 * j24 * j23 * j11 + 2 * j65 * j24 * j21 * j13 - j55 ^ 4 * j24 * j21 + j55 ^ 4 * j21 * j13 - 2 * j55 ^ 2 * j24 * j21 + 2 * j55 ^ 2 * j21 * j13 - j24 * j21 + j21 * j13 ) ) / ( ( j55 ^ 2 + 1 ) * j65 * j23 ^ 2 )',
       '0',
       '0'],
      ['( - ( ( ( j55 ^ 2 + 1 ) * j21 - j65 * j55 * j23 ) * ( j24 - j13 ) * j21 - ( ( j23 * j11 ^ 2 + j23 - j21 * j13 * j11 ) * j23 - ( j23 * j11 - j21 * j13 ) * j24 * j21 ) * j65 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j23 )',
       '( - ( ( ( j55 ^ 2 + 1 ) * j21 - j65 * j55 * j23 ) * ( j24 - j13 ) * ( j23 * j22 + j23 * j11 - j21 * j13 ) - ( ( j23 * j22 * j11 - j23 - j22 * j21 * j13 ) * j23 * j13 - ( j23 * j22 + j23 * j11 - j21 * j13 ) * ( j23 * j11 - j21 * j13 ) * j24 ) * j65 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j23 ^ 2 )',
       '- ( ( j23 * j11 - j21 * j13 - j55 * j23 ) * j65 + ( j55 ^ 2 + 1 ) * j21 ) / ( j55 ^ 2 + 1 )',
       '( - ( ( j23 * j11 - j21 * j13 - j55 * j23 ) * j65 * j24 + ( j23 * j11 - j21 * j13 + j24 * j21 ) * ( j55 ^ 2 + 1 ) ) ) / ( ( j55 ^ 2 + 1 ) * j23 )',
       '0',
       '0'],
      ['( ( ( j55 - j11 ) * j61 - j62 * j21 ) * ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j23 ^ 2 + ( j65 * j55 * j24 ^ 2 * j23 * j21 - 2 * j65 * j55 * j24 * j23 * j21 * j13 + j65 * j55 * j23 * j21 * j13 ^ 2 - j65 * j24 ^ 2 * j23 * j21 * j11 + j65 * j24 ^ 2 * j21 ^ 2 * j13 + j65 * j24 * j23 ^ 2 * j11 ^ 2 + j65 * j24 * j23 ^ 2 - j65 * j24 * j23 * j21 * j13 * j11 - j55 ^ 2 * j24 ^ 2 * j21 ^ 2 + j55 ^ 2 * j24 * j23 * j22 * j21 + j55 ^ 2 * j24 * j23 * j21 * j11 + 2 * j55 ^ 2 * j24 * j21 ^ 2 * j13 - j55 ^ 2 * j23 * j22 * j21 * j13 - j55 ^ 2 * j23 * j21 * j13 * j11 - j55 ^ 2 * j21 ^ 2 * j13 ^ 2 - j24 ^ 2 * j21 ^ 2 + j24 * j23 * j22 * j21 + j24 * j23 * j21 * j11 + 2 * j24 * j21 ^ 2 * j13 - j23 * j22 * j21 * j13 - j23 * j21 * j13 * j11 - j21 ^ 2 * j13 ^ 2 ) * j63 - ( ( j23 * j11 ^ 2 + j23 - j21 * j13 * j11 ) * j23 - ( j23 * j11 - j21 * j13 ) * j24 * j21 ) * j65 * j64 * j23 + ( ( j55 ^ 2 + 1 ) * j21 - j65 * j55 * j23 ) * ( j64 * j23 - j63 * j13 ) * ( j24 - j13 ) * j21 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j65 * j23 ^ 2 )',
       '( ( ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j61 * j21 + j65 * j62 * j55 * j23 ^ 2 - j65 * j62 * j23 ^ 2 * j22 ) * ( j55 ^ 2 + 1 ) * ( j24 - j13 ) - ( j65 * j55 * j24 * j23 ^ 2 * j22 + j65 * j55 * j24 * j23 ^ 2 * j11 - j65 * j55 * j23 ^ 2 * j22 * j13 - j65 * j55 * j23 ^ 2 * j13 * j11 - j65 * j24 * j23 ^ 2 * j22 * j11 - j65 * j24 * j23 ^ 2 * j11 ^ 2 + j65 * j24 * j23 * j22 * j21 * j13 + 2 * j65 * j24 * j23 * j21 * j13 * j11 - j65 * j24 * j21 ^ 2 * j13 ^ 2 + j65 * j23 ^ 2 * j22 * j13 * j11 - j65 * j23 ^ 2 * j13 - j65 * j23 * j22 * j21 * j13 ^ 2 - j55 ^ 2 * j24 * j23 * j22 * j21 - j55 ^ 2 * j24 * j23 * j21 * j11 + j55 ^ 2 * j23 * j22 * j21 * j13 + j55 ^ 2 * j23 * j21 * j13 * j11 - j24 * j23 * j22 * j21 - j24 * j23 * j21 * j11 + j23 * j22 * j21 * j13 + j23 * j21 * j13 * j11 ) * j65 * j64 ) * j23 + ( j65 * j55 ^ 2 * j24 ^ 2 * j23 ^ 2 - 2 * j65 * j55 ^ 2 * j24 * j23 ^ 2 * j13 + j65 * j55 ^ 2 * j23 ^ 2 * j13 ^ 2 + j65 * j55 * j24 ^ 2 * j23 ^ 2 * j22 - j65 * j55 * j24 * j23 ^ 2 * j22 * j13 + j65 * j55 * j24 * j23 ^ 2 * j13 * j11 - j65 * j55 * j23 ^ 2 * j13 ^ 2 * j11 - j65 * j24 ^ 2 * j23 ^ 2 * j22 * j11 - j65 * j24 ^ 2 * j23 ^ 2 * j11 ^ 2 + j65 * j24 ^ 2 * j23 * j22 * j21 * j13 + 2 * j65 * j24 ^ 2 * j23 * j21 * j13 * j11 - j65 * j24 ^ 2 * j21 ^ 2 * j13 ^ 2 + j65 * j24 * j23 ^ 2 * j22 * j13 * j11 - j65 * j24 * j23 ^ 2 * j13 - j65 * j24 * j23 * j22 * j21 * j13 ^ 2 - j55 ^ 3 * j24 ^ 2 * j23 * j21 + 2 * j55 ^ 3 * j24 * j23 * j21 * j13 - j55 ^ 3 * j23 * j21 * j13 ^ 2 - j55 ^ 2 * j24 ^ 2 * j23 * j22 * j21 - j55 ^ 2 * j24 ^ 2 * j23 * j21 * j11 + j55 ^ 2 * j24 ^ 2 * j21 ^ 2 * j13 + j55 ^ 2 * j24 * j23 ^ 2 * j22 ^ 2 + j55 ^ 2 * j24 * j23 ^ 2 + 2 * j55 ^ 2 * j24 * j23 * j22 * j21 * j13 - j55 ^ 2 * j24 * j21 ^ 2 * j13 ^ 2 - j55 ^ 2 * j23 ^ 2 * j22 ^ 2 * j13 - j55 ^ 2 * j23 ^ 2 * j13 - j55 ^ 2 * j23 * j22 * j21 * j13 ^ 2 + j55 ^ 2 * j23 * j21 * j13 ^ 2 * j11 - j55 * j24 ^ 2 * j23 * j21 + 2 * j55 * j24 * j23 * j21 * j13 - j55 * j23 * j21 * j13 ^ 2 - j24 ^ 2 * j23 * j22 * j21 - j24 ^ 2 * j23 * j21 * j11 + j24 ^ 2 * j21 ^ 2 * j13 + j24 * j23 ^ 2 * j22 ^ 2 + j24 * j23 ^ 2 + 2 * j24 * j23 * j22 * j21 * j13 - j24 * j21 ^ 2 * j13 ^ 2 - j23 ^ 2 * j22 ^ 2 * j13 - j23 ^ 2 * j13 - j23 * j22 * j21 * j13 ^ 2 + j23 * j21 * j13 ^ 2 * j11 ) * j65 * j63 + ( j24 * j23 * j11 - j24 * j21 * j13 - j23 * j22 * j13 - ( j24 - j13 ) * j55 * j23 ) * ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j65 * j61 * j23 - ( ( j55 ^ 2 + 1 ) * j21 - j65 * j55 * j23 ) * ( j65 * j64 * j23 * j21 * j13 - j65 * j63 * j55 * j24 * j23 + j65 * j63 * j55 * j23 * j13 + j65 * j63 * j24 * j23 * j11 - j65 * j63 * j24 * j21 * j13 - j65 * j63 * j23 * j13 * j11 + j63 * j55 ^ 2 * j24 * j21 - j63 * j55 ^ 2 * j21 * j13 + j63 * j24 * j21 - j63 * j21 * j13 ) * ( j24 - j13 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j65 ^ 2 * j23 ^ 3 )',
       '( - ( ( ( j62 * j23 + j61 * j13 - j63 * j55 - j64 * j21 ) * ( j55 ^ 2 + 1 ) - ( j23 * j11 - j21 * j13 - j55 * j23 ) * j65 * j64 ) * j23 + ( j24 * j23 * j11 - j24 * j21 * j13 - j23 * j22 * j13 - ( j24 - j13 ) * j55 * j23 ) * j65 * j63 - ( ( ( j55 ^ 2 + 1 ) * j22 + ( j55 - j22 ) * j65 * j13 ) * j23 - ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j21 ) * j63 ) ) / ( ( j55 ^ 2 + 1 ) * j65 * j23 )',
       '( - ( j65 ^ 2 * j64 * j55 * j24 * j23 ^ 2 - j65 ^ 2 * j64 * j24 * j23 ^ 2 * j11 + j65 ^ 2 * j64 * j24 * j23 * j21 * j13 - j65 ^ 2 * j63 * j55 * j24 ^ 2 * j23 + j65 ^ 2 * j63 * j24 ^ 2 * j23 * j11 - j65 ^ 2 * j63 * j24 ^ 2 * j21 * j13 - j65 * j64 * j55 ^ 3 * j23 ^ 2 - j65 * j64 * j55 ^ 2 * j24 * j23 * j21 - j65 * j64 * j55 ^ 2 * j23 ^ 2 * j11 + j65 * j64 * j55 ^ 2 * j23 * j21 * j13 - j65 * j64 * j55 * j23 ^ 2 - j65 * j64 * j24 * j23 * j21 - j65 * j64 * j23 ^ 2 * j11 + j65 * j64 * j23 * j21 * j13 + j65 * j63 * j55 ^ 2 * j24 ^ 2 * j21 - j65 * j63 * j55 ^ 2 * j24 * j23 * j22 + j65 * j63 * j55 ^ 2 * j24 * j23 * j11 - 2 * j65 * j63 * j55 ^ 2 * j24 * j21 * j13 + j65 * j63 * j24 ^ 2 * j21 - j65 * j63 * j24 * j23 * j22 + j65 * j63 * j24 * j23 * j11 - 2 * j65 * j63 * j24 * j21 * j13 + j65 * j62 * j55 ^ 2 * j24 * j23 ^ 2 + j65 * j62 * j24 * j23 ^ 2 + j65 * j61 * j55 ^ 2 * j24 * j23 * j13 + j65 * j61 * j24 * j23 * j13 + j63 * j55 ^ 4 * j24 * j21 - j63 * j55 ^ 4 * j21 * j13 + 2 * j63 * j55 ^ 2 * j24 * j21 - 2 * j63 * j55 ^ 2 * j21 * j13 + j63 * j24 * j21 - j63 * j21 * j13 - j61 * j55 ^ 4 * j24 * j23 + j61 * j55 ^ 4 * j23 * j13 - 2 * j61 * j55 ^ 2 * j24 * j23 + 2 * j61 * j55 ^ 2 * j23 * j13 - j61 * j24 * j23 + j61 * j23 * j13 ) ) / ( ( j55 ^ 2 + 1 ) * j65 ^ 2 * j23 ^ 2 )',
       'j55',
       '- ( j55 ^ 2 + 1 ) / j65'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'g61_case2': {
    'params': ['j13', 'j21', 'j22', 'j24', 'j41', 'j42', 'j55', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['- ( ( j41 * j24 + j22 * j21 ) / ( j21 ) )',
       '- ( ( j22 ^ 2 + 1 + j42 * j24 ) / ( j21 ) )',
       'j13',
       '( - ( ( j24 + j13 ) * j22 * j21 + j41 * j24 ^ 2 + ( j24 - j13 ) * j55 * j21 ) ) / j21 ^ 2',
       '0',
       '0'],
      ['j21',
       'j22',
       '0',
       'j24',
       '0',
       '0'],
      ['( - ( ( j24 - j13 ) * j41 * j22 - j42 * j24 * j21 - ( j24 - j13 ) * j55 * j41 ) ) / ( j21 * j13 )',
       '( ( j24 + j13 ) * j42 * j22 * j21 - ( j22 ^ 2 + 1 ) * j41 * j24 + ( j24 - j13 ) * j55 * j42 * j21 ) / ( j21 ^ 2 * j13 )',
       '- ( ( j55 * j24 - j55 * j13 + j22 * j13 ) / ( j24 ) )',
       '( ( ( ( j24 - j13 ) * j55 ^ 2 - ( j24 - j13 ) * j55 * j22 + ( j22 ^ 2 + 1 ) * j24 + j42 * j24 ^ 2 ) * ( j24 - j13 ) + ( j22 ^ 2 + 1 + j42 * j24 ) * j24 * j13 ) * j21 + ( ( j24 + j13 ) * j22 * j21 + j41 * j24 ^ 2 ) * ( j55 - j22 ) * ( j24 - j13 ) ) / ( j24 * j21 ^ 2 * j13 )',
       '0',
       '0'],
      ['j41',
       'j42',
       '- ( ( j21 * j13 ) / ( j24 ) )',
       '( j41 * j24 ^ 2 + j22 * j21 * j13 + ( j24 - j13 ) * j55 * j21 ) / ( j24 * j21 )',
       '0',
       '0'],
      ['( - ( j64 * j41 * j21 * j13 + j63 * j55 * j41 * j24 - j63 * j55 * j41 * j13 + j63 * j42 * j24 * j21 - j63 * j41 * j24 * j22 + j63 * j41 * j22 * j13 + j62 * j21 ^ 2 * j13 - j61 * j55 * j21 * j13 - j61 * j41 * j24 * j13 - j61 * j22 * j21 * j13 ) * j24 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j21 )',
       '( - ( ( j64 * j42 * j21 - j62 * j55 * j21 + j62 * j22 * j21 - j61 * j42 * j24 - j61 * j22 ^ 2 - j61 ) * j21 * j13 + ( j55 * j42 * j21 + j42 * j22 * j21 - j41 * j22 ^ 2 - j41 ) * ( j24 - j13 ) * j63 - ( ( j22 ^ 2 + 1 ) * j41 - 2 * j42 * j22 * j21 ) * j63 * j13 ) * j24 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j21 ^ 2 )',
       '( ( j64 * j21 * j13 + 2 * j63 * j55 * j24 - j63 * j55 * j13 + j63 * j22 * j13 - j61 * j24 * j13 ) * j13 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) )',
       '( ( ( j24 - j13 ) * j64 * j21 + j61 * j24 * j13 - ( j55 - j22 ) * ( j24 - j13 ) * j63 ) * ( ( j24 + j13 ) * j22 * j21 + j41 * j24 ^ 2 ) + ( ( j64 * j55 - j62 * j24 ) * j21 + ( j24 - j13 ) * j61 * j55 ) * j24 * j21 * j13 - ( ( j41 * j24 + j22 * j21 ) * ( j24 - j13 ) * j24 + ( j41 * j24 + j22 * j21 ) * j24 * j13 + ( j24 - j13 ) * j55 * j21 * j13 ) * j64 * j21 - ( ( ( j24 - j13 ) * j55 ^ 2 - ( j24 - j13 ) * j55 * j22 + ( j22 ^ 2 + 1 ) * j24 + j42 * j24 ^ 2 ) * ( j24 - j13 ) + ( j22 ^ 2 + 1 + j42 * j24 ) * j24 * j13 ) * j63 * j21 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j21 ^ 2 )',
       'j55',
       '-( ( j24 * j13 ) / ( j24 - j13 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '( ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) ) / ( j24 * j13 ) )',
       '- j55'],
    ],
  },
  'g61_case3': {
    'params': ['j11', 'j12', 'j41', 'j42', 'j55', 'j61', 'j62', 'j63', 'j64', 'j65'],
    'defs': [
    ],
    'entries': [
      ['j11',
       'j12',
       '0',
       '0',
       '0',
       '0'],
      ['- ( ( j11 ^ 2 + 1 ) / ( j12 ) )',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['j42',
       '( ( ( 2 * j42 * j11 - j41 * j12 ) * j12 ) / ( j11 ^ 2 + 1 ) )',
       'j11',
       '- j12',
       '0',
       '0'],
      ['j41',
       'j42',
       '( ( j11 ^ 2 + 1 ) / ( j12 ) )',
       '- j11',
       '0',
       '0'],
      ['( ( j55 - j11 ) * j61 * j12 + ( j11 ^ 2 + 1 ) * j62 - j63 * j42 * j12 - j64 * j41 * j12 ) / ( j65 * j12 )',
       '( - ( ( 2 * j42 * j11 - j41 * j12 ) * j63 * j12 + ( j11 ^ 2 + 1 ) * j64 * j42 - ( j62 * j55 + j62 * j11 - j61 * j12 ) * ( j11 ^ 2 + 1 ) ) ) / ( ( j11 ^ 2 + 1 ) * j65 )',
       '( ( ( j55 - j11 ) * j63 * j12 - ( j11 ^ 2 + 1 ) * j64 ) / ( j65 * j12 ) )',
       '( ( j64 * j55 + j64 * j11 + j63 * j12 ) / ( j65 ) )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'g61_case4': {
    'params': ['j11', 'j22', 'j23', 'j24', 'j41', 'j55', 'j61', 'j62', 'j63', 'j64', 'j65'],
    'defs': [
    ],
    'entries': [
      ['j11',
       '( ( j55 ^ 2 + 1 ) * ( j22 - j11 ) * j41 * j24 + ( j55 - j22 ) * ( j11 ^ 2 + 1 ) * j65 * j23 ) / ( ( j55 ^ 2 + 1 ) * j41 * j23 )',
       '( ( j55 ^ 2 + 1 ) * j41 * j24 - ( j11 ^ 2 + 1 ) * j65 * j23 ) / ( ( j55 ^ 2 + 1 ) * j41 )',
       '( - ( ( j55 ^ 2 + 1 ) * ( j11 ^ 2 + 1 ) * j23 - ( j55 ^ 2 + 1 ) * j41 * j24 ^ 2 + ( j11 ^ 2 + 1 ) * j65 * j24 * j23 ) ) / ( ( j55 ^ 2 + 1 ) * j41 * j23 )',
       '0',
       '0'],
      ['0',
       'j22',
       'j23',
       'j24',
       '0',
       '0'],
      ['- ( ( j41 * j24 ) / ( j23 ) )',
       '( - ( ( ( j22 ^ 2 + 1 ) * j23 - j41 * j24 ^ 2 ) * ( j55 ^ 2 + 1 ) - ( j22 * j11 - 1 - ( j22 + j11 ) * j55 ) * j65 * j24 * j23 ) ) / ( ( j55 ^ 2 + 1 ) * j23 ^ 2 )',
       '- ( ( j65 * j55 * j24 - j65 * j24 * j11 + j55 ^ 2 * j22 + j22 ) / ( j55 ^ 2 + 1 ) )',
       '( - ( j65 * j55 * j24 - j65 * j24 * j11 + j55 ^ 2 * j22 - j55 ^ 2 * j11 + j22 - j11 ) * j24 ) / ( ( j55 ^ 2 + 1 ) * j23 )',
       '0',
       '0'],
      ['j41',
       '( - ( ( j22 * j11 - 1 - ( j22 + j11 ) * j55 ) * j65 * j23 + ( j55 ^ 2 + 1 ) * j41 * j24 ) ) / ( ( j55 ^ 2 + 1 ) * j23 )',
       '( ( ( j55 - j11 ) * j65 * j23 ) / ( j55 ^ 2 + 1 ) )',
       '- ( ( ( j55 ^ 2 + 1 ) * j11 - ( j55 - j11 ) * j65 * j24 ) / ( j55 ^ 2 + 1 ) )',
       '0',
       '0'],
      ['( - ( j64 * j41 * j23 - j63 * j41 * j24 - j61 * j55 * j23 + j61 * j23 * j11 ) ) / ( j65 * j23 )',
       '( ( ( j55 ^ 2 + 1 ) * ( j55 - j22 ) * j62 * j41 * j23 - ( j55 ^ 2 + 1 ) * ( j22 - j11 ) * j61 * j41 * j24 - ( j55 - j22 ) * ( j11 ^ 2 + 1 ) * j65 * j61 * j23 - ( ( j22 + j11 ) * j55 + j11 ^ 2 + 1 ) * j65 * j64 * j41 * j23 - ( j22 * j11 - 1 - ( j22 + j11 ) * j55 ) * j65 * j63 * j41 * j24 ) * j23 + ( ( j22 ^ 2 + 1 ) * j23 - j41 * j24 ^ 2 ) * ( j55 ^ 2 + 1 ) * j63 * j41 + ( ( j55 ^ 2 + 1 ) * j41 * j24 + ( j22 + j11 ) * j65 * j23 * j11 ) * j64 * j41 * j23 ) / ( ( j55 ^ 2 + 1 ) * j65 * j41 * j23 ^ 2 )',
       '( - ( ( ( ( j55 - j11 ) * j64 * j41 - ( j11 ^ 2 + 1 ) * j61 ) * j23 - ( j22 - j11 ) * j63 * j41 * j24 ) * j65 + ( j62 * j23 + j61 * j24 - j63 * j55 ) * ( j55 ^ 2 + 1 ) * j41 - ( ( j55 ^ 2 + 1 ) * j22 + ( j55 - j22 ) * j65 * j24 ) * j63 * j41 ) ) / ( ( j55 ^ 2 + 1 ) * j65 * j41 )',
       '( - ( ( ( ( j55 - j11 ) * j64 * j41 - ( j11 ^ 2 + 1 ) * j61 ) * j65 * j24 - ( j55 ^ 2 + 1 ) * ( j11 ^ 2 + 1 ) * j61 ) * j23 + ( ( j62 * j23 + j61 * j24 ) * j24 - ( j55 + j11 ) * j64 * j23 ) * ( j55 ^ 2 + 1 ) * j41 + ( ( j11 ^ 2 + 1 ) * j23 - j41 * j24 ^ 2 ) * ( j55 - j22 ) * j65 * j63 - ( ( j55 ^ 2 + 1 ) * ( j22 - j11 ) * j41 * j24 + ( j55 - j22 ) * ( j11 ^ 2 + 1 ) * j65 * j23 + ( j22 - j11 ) * j65 * j41 * j24 ^ 2 ) * j63 ) ) / ( ( j55 ^ 2 + 1 ) * j65 * j41 * j23 )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'g61_case5': {
    'params': ['j12', 'j13', 'j22', 'j24', 'j32', 'j55', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['( ( j55 * j24 - j55 * j13 + j22 * j13 ) / ( j24 ) )',
       'j12',
       'j13',
       '( ( ( j24 + j13 ) * j22 * j12 + j32 * j24 * j13 + ( j24 - j13 ) * j55 * j12 ) / ( j22 ^ 2 + 1 ) )',
       '0',
       '0'],
      ['0',
       'j22',
       '0',
       'j24',
       '0',
       '0'],
      ['( - ( ( j24 - j13 ) * j55 ^ 2 * j24 - ( j24 - j13 ) * j55 ^ 2 * j13 + 2 * ( j24 - j13 ) * j55 * j22 * j13 + ( j22 ^ 2 + 1 ) * j24 * j13 + ( j24 - j22 ^ 2 * j13 ) * ( j24 - j13 ) ) ) / ( j24 ^ 2 * j13 )',
       'j32',
       '- ( ( j55 * j24 - j55 * j13 + j22 * j13 ) / ( j24 ) )',
       '( - ( ( ( j24 + j13 ) * j22 * j12 + j32 * j24 * j13 ) * ( j24 - j13 ) * j55 - ( ( j24 + j13 ) * j22 * j12 + j32 * j24 * j13 ) * ( j24 - j13 ) * j22 + ( ( j24 - j13 ) ^ 2 * j55 ^ 2 - ( j24 - j13 ) ^ 2 * j55 * j22 + ( j24 - j13 ) * ( j22 ^ 2 + 1 ) * j24 + ( j22 ^ 2 + 1 ) * j24 * j13 ) * j12 ) ) / ( ( j22 ^ 2 + 1 ) * j24 * j13 )',
       '0',
       '0'],
      ['0',
       '- ( ( j22 ^ 2 + 1 ) / ( j24 ) )',
       '0',
       '- j22',
       '0',
       '0'],
      ['( ( j55 - j22 ) * j61 * j24 * j13 ^ 2 + ( j24 - j22 ^ 2 * j13 ) * ( j24 - j13 ) * j63 + ( ( j24 - j13 ) * j55 ^ 2 * j24 - ( j24 - j13 ) * j55 ^ 2 * j13 + 2 * ( j24 - j13 ) * j55 * j22 * j13 + ( j22 ^ 2 + 1 ) * j24 * j13 ) * j63 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * j24 )',
       '( ( ( j62 * j55 - j62 * j22 - j61 * j12 - j63 * j32 ) * j24 + ( j22 ^ 2 + 1 ) * j64 ) * j13 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) )',
       '( ( 2 * j63 * j55 * j24 - j63 * j55 * j13 + j63 * j22 * j13 - j61 * j24 * j13 ) * j13 ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) )',
       '( ( ( j24 - j13 ) ^ 2 * j55 ^ 2 - ( j24 - j13 ) ^ 2 * j55 * j22 + ( j24 - j13 ) * ( j22 ^ 2 + 1 ) * j24 + ( j22 ^ 2 + 1 ) * j24 * j13 ) * j63 * j12 + ( j64 * j55 * j22 ^ 2 + j64 * j55 + j64 * j22 ^ 3 + j64 * j22 - j62 * j24 * j22 ^ 2 - j62 * j24 - j61 * j55 * j24 * j12 + j61 * j55 * j13 * j12 ) * j24 * j13 + ( ( j24 + j13 ) * j22 * j12 + j32 * j24 * j13 ) * ( ( j24 - j13 ) * j63 * j55 - ( j24 - j13 ) * j63 * j22 - j61 * j24 * j13 ) ) / ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) * ( j22 ^ 2 + 1 ) )',
       'j55',
       '- ( ( j24 * j13 ) / ( j24 - j13 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '( ( ( j55 ^ 2 + 1 ) * ( j24 - j13 ) ) / ( j24 * j13 ) )',
       '- j55'],
    ],
  },
  'g66': {
    'params': ['j11', 'j21', 'j33', 'j41', 'j42', 'j43', 'j51', 'j53', 'j54', 'j61'],
    'defs': [
    ],
    'entries': [
      ['j11',
       '- ( ( j11 ^ 2 + 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['( ( j33 - j11 ) * j41 - j42 * j21 ) / j43',
       '( ( j33 + j11 ) * j42 * j21 + ( j11 ^ 2 + 1 ) * j41 ) / ( j43 * j21 )',
       'j33',
       '- ( ( j33 ^ 2 + 1 ) / ( j43 ) )',
       '0',
       '0'],
      ['j41',
       'j42',
       'j43',
       '- j33',
       '0',
       '0'],
      ['j51',
       '( - ( ( j33 - j11 ) * j53 * j41 - ( j33 - j11 ) * j51 * j43 - j53 * j42 * j21 + j54 * j43 * j41 + j61 * j43 ^ 2 ) ) / ( j43 * j21 )',
       'j53',
       'j54',
       '- j33',
       'j43'],
      ['j61',
       '( - ( ( ( j33 + j11 ) * j41 + j42 * j21 ) * j54 * j43 + ( j53 * j41 - j51 * j43 ) * ( j33 ^ 2 + 1 ) + ( j33 + j11 ) * j61 * j43 ^ 2 ) ) / ( j43 ^ 2 * j21 )',
       '- j54',
       '( ( j33 ^ 2 + 1 ) * j53 + 2 * j54 * j43 * j33 ) / j43 ^ 2',
       '- ( ( j33 ^ 2 + 1 ) / ( j43 ) )',
       'j33'],
    ],
  },
  'g65': {
    'params': ['j21', 'j31', 'j41', 'j43', 'j51', 'j55', 'j61', 'j63', 'j64', 'j65'],
    'defs': [
      ('a', '( - ( ( j55 ^ 2 + 1 ) * j21 - j65 * j55 * j43 ) ) / ( j65 * j43 )'),
      ('b', '( - ( ( j55 + j43 ) * j21 - j65 * j43 ) ) / j21'),
    ],
    'entries': [
      ['a',
       '- ( ( a ^ 2 + 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '- a',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '( ( ( ( j55 + 2 * j43 ) * j55 * j41 + j43 ^ 2 * j41 + j43 ^ 2 * j31 + j41 ) * j65 + ( j55 ^ 2 + 1 ) * j31 * j21 ) * j21 ^ 2 + ( ( j65 * j43 - 2 * j55 * j21 ) * j41 - ( 2 * j41 + j31 ) * j43 * j21 ) * j65 ^ 2 * j43 ) / ( j65 * j43 * j21 ^ 3 )',
       'b',
       '- ( ( b ^ 2 + 1 ) / ( j43 ) )',
       '0',
       '0'],
      ['j41',
       '( ( ( j55 ^ 2 + 1 ) * j21 ^ 2 + j65 ^ 2 * j43 ^ 2 ) * j41 - ( ( j41 + j31 ) * j43 + 2 * j55 * j41 ) * j65 * j43 * j21 ) / ( j65 * j43 * j21 ^ 2 )',
       'j43',
       '- b',
       '0',
       '0'],
      ['j51',
       '( - ( ( ( ( j55 * j41 + 2 * j43 * j41 + 2 * j43 * j31 ) * j55 + j43 ^ 2 * j41 + j43 ^ 2 * j31 + j41 ) * j63 - ( j61 * j43 + j51 * j21 ) * ( j55 ^ 2 + 1 ) - ( j41 + j31 ) * j64 * j43 ^ 2 ) * j21 ^ 2 - ( ( 2 * ( j63 * j41 - j51 * j21 ) * j55 + ( 2 * j41 + j31 ) * j63 * j43 ) * j21 - ( j65 * j63 + j64 * j21 ) * j43 * j41 ) * j65 * j43 ) ) / ( j65 * j43 * j21 ^ 3 )',
       '( ( ( ( 2 * j55 + j43 ) * j63 - j64 * j43 ) * j21 - j65 * j63 * j43 ) / ( j65 * j21 ) )',
       '( - ( ( ( j64 * j43 ^ 2 - j63 ) * j21 - j65 * j64 * j43 ^ 2 ) * j21 - ( ( j55 + j43 ) * j21 - j65 * j43 ) ^ 2 * j63 ) ) / ( j65 * j43 * j21 ^ 2 )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       '( - ( ( j65 * j51 + j64 * j41 + j63 * j31 ) * j65 * j43 - ( j55 ^ 2 + 1 ) * j61 * j21 ) ) / ( j65 * j43 * j21 )',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'g68': {
    'params': ['j21', 'j31', 'j32', 'j33', 'j43', 'j55', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['( ( j55 * j43 + j55 * j21 - j33 * j21 ) / ( j43 ) )',
       '- ( ( ( j55 * j43 + j55 * j21 - j33 * j21 ) ^ 2 + j43 ^ 2 ) / ( j43 ^ 2 * j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '- ( ( j55 * j43 + j55 * j21 - j33 * j21 ) / ( j43 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       'j32',
       'j33',
       '- ( ( j33 ^ 2 + 1 ) / ( j43 ) )',
       '0',
       '0'],
      ['( j43 * j33 * j31 + j43 * j32 * j21 - j33 * j31 * j21 + ( j43 + j21 ) * j55 * j31 ) / ( j33 ^ 2 + 1 )',
       '( - ( ( ( j55 - j33 ) * ( j43 * j33 * j31 + j43 * j32 * j21 - j33 * j31 * j21 ) - ( j43 + j21 ) * j55 * j33 * j31 ) * ( j43 + j21 ) + ( ( j43 + j21 ) ^ 2 * j55 ^ 2 + ( j33 ^ 2 + 1 ) * j43 ^ 2 ) * j31 ) ) / ( ( j33 ^ 2 + 1 ) * j43 * j21 )',
       'j43',
       '- j33',
       '0',
       '0'],
      ['( - ( j64 * j55 * j43 ^ 2 * j31 + j64 * j55 * j43 * j31 * j21 + j64 * j43 ^ 2 * j33 * j31 + j64 * j43 ^ 2 * j32 * j21 - j64 * j43 * j33 * j31 * j21 + j63 * j43 * j33 ^ 2 * j31 + j63 * j43 * j31 + j62 * j43 * j33 ^ 2 * j21 + j62 * j43 * j21 + j61 * j55 * j33 ^ 2 * j21 + j61 * j55 * j21 - j61 * j33 ^ 3 * j21 - j61 * j33 * j21 ) * ( j43 + j21 ) ) / ( ( j33 ^ 2 + 1 ) * j43 ^ 2 * j21 )',
       '( ( j64 * j55 ^ 2 * j43 ^ 3 * j31 + 2 * j64 * j55 ^ 2 * j43 ^ 2 * j31 * j21 + j64 * j55 ^ 2 * j43 * j31 * j21 ^ 2 + j64 * j55 * j43 ^ 3 * j32 * j21 - 2 * j64 * j55 * j43 ^ 2 * j33 * j31 * j21 + j64 * j55 * j43 ^ 2 * j32 * j21 ^ 2 - 2 * j64 * j55 * j43 * j33 * j31 * j21 ^ 2 - j64 * j43 ^ 3 * j33 * j32 * j21 + j64 * j43 ^ 3 * j31 - j64 * j43 ^ 2 * j33 * j32 * j21 ^ 2 + j64 * j43 * j33 ^ 2 * j31 * j21 ^ 2 - j63 * j43 ^ 2 * j33 ^ 2 * j32 * j21 - j63 * j43 ^ 2 * j32 * j21 + 2 * j62 * j55 * j43 ^ 2 * j33 ^ 2 * j21 + 2 * j62 * j55 * j43 ^ 2 * j21 + j62 * j55 * j43 * j33 ^ 2 * j21 ^ 2 + j62 * j55 * j43 * j21 ^ 2 - j62 * j43 * j33 ^ 3 * j21 ^ 2 - j62 * j43 * j33 * j21 ^ 2 + j61 * j55 ^ 2 * j43 ^ 2 * j33 ^ 2 + j61 * j55 ^ 2 * j43 ^ 2 + 2 * j61 * j55 ^ 2 * j43 * j33 ^ 2 * j21 + 2 * j61 * j55 ^ 2 * j43 * j21 + j61 * j55 ^ 2 * j33 ^ 2 * j21 ^ 2 + j61 * j55 ^ 2 * j21 ^ 2 - 2 * j61 * j55 * j43 * j33 ^ 3 * j21 - 2 * j61 * j55 * j43 * j33 * j21 - 2 * j61 * j55 * j33 ^ 3 * j21 ^ 2 - 2 * j61 * j55 * j33 * j21 ^ 2 + j61 * j43 ^ 2 * j33 ^ 2 + j61 * j43 ^ 2 + j61 * j33 ^ 4 * j21 ^ 2 + j61 * j33 ^ 2 * j21 ^ 2 ) * ( j43 + j21 ) ) / ( ( j33 ^ 2 + 1 ) * j43 ^ 3 * j21 ^ 2 )',
       '- ( ( ( j64 * j43 - j63 * j55 + j63 * j33 ) * ( j43 + j21 ) ) / ( j43 * j21 ) )',
       '( ( j64 * j55 * j43 + j64 * j43 * j33 + j63 * j33 ^ 2 + j63 ) * ( j43 + j21 ) ) / ( j43 ^ 2 * j21 )',
       'j55',
       '- ( ( ( j55 ^ 2 + 1 ) * ( j43 + j21 ) ) / ( j43 * j21 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '( ( j43 * j21 ) / ( j43 + j21 ) )',
       '- j55'],
    ],
  },
  'm10_case1': {
    'params': ['j11', 'j21', 'j31', 'j33', 'j41', 'j43', 'j53', 'j61', 'j62', 'j63'],
    'defs': [
      ('r', '- ( ( ( j43 * j11 - j33 * j21 ) * j21 + ( j11 ^ 2 + 1 ) * j33 ) * j43 - ( j33 ^ 2 + 1 ) * j21 * j11 ) / ( ( ( j43 - j21 ) * j21 - ( j11 ^ 2 + 1 ) ) * j43 + ( j33 ^ 2 + 1 ) * j21 )'),
      ('b', '- ( ( j43 * j11 ^ 2 + j43 - 2 * j33 * j21 * j11 - 2 * j21 ) * j43 + ( j33 ^ 2 + 1 ) * j21 ^ 2 ) / ( ( ( j43 - j21 ) * j21 - ( j11 ^ 2 + 1 ) ) * j43 + ( j33 ^ 2 + 1 ) * j21 )'),
    ],
    'entries': [
      ['j11',
       '- ( ( j11 ^ 2 + 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '( ( ( j33 ^ 2 + 1 ) * j41 - ( j33 + j11 ) * j43 * j31 ) / ( j43 * j21 ) )',
       'j33',
       '- ( ( j33 ^ 2 + 1 ) / ( j43 ) )',
       '0',
       '0'],
      ['j41',
       '( ( ( j33 - j11 ) * j41 - j43 * j31 ) / ( j21 ) )',
       'j43',
       '- j33',
       '0',
       '0'],
      ['( ( ( 2 * j43 * j11 - j33 * j21 ) * j21 + ( j11 ^ 2 + 1 ) * j33 - ( j11 ^ 2 + 1 + j21 ^ 2 ) * j11 ) * j61 * j43 ^ 2 + ( ( j43 * j11 ^ 2 + j43 - 2 * j33 * j21 * j11 - 2 * j21 ) * j43 + ( j33 ^ 2 + 1 ) * j21 ^ 2 ) * j53 * j41 + ( j43 ^ 2 * j21 - j43 * j21 ^ 2 - j43 * j11 ^ 2 - j43 + j33 ^ 2 * j21 + j21 ) * j62 * j43 * j21 - ( ( ( ( j33 - j11 ) * j41 - j43 * j31 ) * ( j33 ^ 2 + 1 ) - ( j43 ^ 2 * j31 - j43 * j41 * j33 - j43 * j41 * j11 + 2 * j41 * j33 * j21 ) * j43 ) * j21 + ( j11 ^ 2 + 1 + j21 ^ 2 ) * j43 ^ 2 * j31 ) * j63 ) / ( ( ( j43 * j11 - j33 * j21 ) ^ 2 + ( j43 - j21 ) ^ 2 ) * j43 )',
       '( j63 * j43 ^ 2 * j41 * j21 * j11 ^ 2 + j63 * j43 ^ 2 * j41 * j21 - j63 * j43 ^ 2 * j33 * j31 * j21 ^ 2 + j63 * j43 ^ 2 * j33 * j31 * j11 ^ 2 + j63 * j43 ^ 2 * j33 * j31 + j63 * j43 ^ 2 * j31 * j21 ^ 2 * j11 + j63 * j43 ^ 2 * j31 * j11 ^ 3 + j63 * j43 ^ 2 * j31 * j11 + j63 * j43 * j41 * j33 ^ 2 * j21 ^ 2 - j63 * j43 * j41 * j33 ^ 2 * j11 ^ 2 - j63 * j43 * j41 * j33 ^ 2 - 2 * j63 * j43 * j41 * j33 * j21 ^ 2 * j11 - j63 * j43 * j41 * j21 ^ 2 - j63 * j43 * j41 * j11 ^ 2 - j63 * j43 * j41 - 2 * j63 * j43 * j33 ^ 2 * j31 * j21 * j11 - 2 * j63 * j43 * j31 * j21 * j11 + 2 * j63 * j41 * j33 ^ 3 * j21 * j11 - j63 * j41 * j33 ^ 2 * j21 * j11 ^ 2 + j63 * j41 * j33 ^ 2 * j21 + 2 * j63 * j41 * j33 * j21 * j11 - j63 * j41 * j21 * j11 ^ 2 + j63 * j41 * j21 - j62 * j43 ^ 2 * j33 * j21 ^ 3 + j62 * j43 ^ 2 * j33 * j21 * j11 ^ 2 + j62 * j43 ^ 2 * j33 * j21 + j62 * j43 ^ 2 * j21 ^ 3 * j11 + j62 * j43 ^ 2 * j21 * j11 ^ 3 + j62 * j43 ^ 2 * j21 * j11 - 2 * j62 * j43 * j33 ^ 2 * j21 ^ 2 * j11 - 2 * j62 * j43 * j21 ^ 2 * j11 - j61 * j43 ^ 3 * j21 * j11 ^ 2 - j61 * j43 ^ 3 * j21 + j61 * j43 ^ 2 * j21 ^ 2 * j11 ^ 2 + j61 * j43 ^ 2 * j21 ^ 2 + j61 * j43 ^ 2 * j11 ^ 4 + 2 * j61 * j43 ^ 2 * j11 ^ 2 + j61 * j43 ^ 2 - j61 * j43 * j33 ^ 2 * j21 * j11 ^ 2 - j61 * j43 * j33 ^ 2 * j21 - j61 * j43 * j21 * j11 ^ 2 - j61 * j43 * j21 - j53 * j43 ^ 3 * j31 * j11 ^ 2 - j53 * j43 ^ 3 * j31 + j53 * j43 ^ 2 * j41 * j33 * j11 ^ 2 + j53 * j43 ^ 2 * j41 * j33 - j53 * j43 ^ 2 * j41 * j11 ^ 3 - j53 * j43 ^ 2 * j41 * j11 + 2 * j53 * j43 ^ 2 * j33 * j31 * j21 * j11 + 2 * j53 * j43 ^ 2 * j31 * j21 - 2 * j53 * j43 * j41 * j33 ^ 2 * j21 * j11 + 2 * j53 * j43 * j41 * j33 * j21 * j11 ^ 2 - 2 * j53 * j43 * j41 * j33 * j21 + 2 * j53 * j43 * j41 * j21 * j11 - j53 * j43 * j33 ^ 2 * j31 * j21 ^ 2 - j53 * j43 * j31 * j21 ^ 2 + j53 * j41 * j33 ^ 3 * j21 ^ 2 - j53 * j41 * j33 ^ 2 * j21 ^ 2 * j11 + j53 * j41 * j33 * j21 ^ 2 - j53 * j41 * j21 ^ 2 * j11 ) / ( ( ( j43 * j11 - j33 * j21 ) ^ 2 + ( j43 - j21 ) ^ 2 ) * j43 * j21 )',
       'j53',
       '( - ( j63 * j43 ^ 2 * j21 ^ 2 + 2 * j63 * j43 * j33 * j21 * j11 - 2 * j63 * j43 * j21 + j63 * j33 ^ 2 * j11 ^ 2 + j63 * j33 ^ 2 + j63 * j11 ^ 2 + j63 + j53 * j43 ^ 2 * j33 * j21 - j53 * j43 ^ 2 * j21 * j11 - 2 * j53 * j43 * j33 * j11 ^ 2 - 2 * j53 * j43 * j33 + j53 * j33 ^ 3 * j21 + j53 * j33 ^ 2 * j21 * j11 + j53 * j33 * j21 + j53 * j21 * j11 ) ) / ( ( ( ( j43 - j21 ) * j21 - ( j11 ^ 2 + 1 ) ) * j43 + j21 * ( j33 ^ 2 + 1 ) ) * j43 )',
       'r',
       '- ( ( r ^ 2 + 1 ) / ( b ) )'],
      ['j61',
       'j62',
       'j63',
       '( - ( ( ( j43 * j33 + j43 * j11 - 2 * j33 * j21 ) * j43 + ( j33 ^ 2 + 1 ) * ( j33 - j11 ) ) * j63 * j21 - ( ( j43 * j11 ^ 2 + j43 - 2 * j33 * j21 * j11 - 2 * j21 ) * j43 + ( j33 ^ 2 + 1 ) * j21 ^ 2 ) * j53 ) ) / ( ( ( j43 ^ 2 - j43 * j21 + j33 ^ 2 + 1 ) * j21 - ( j11 ^ 2 + 1 ) * j43 ) * j43 )',
       'b',
       '- r'],
    ],
  },
  'm10_case21': {
    'params': ['j21', 'j31', 'j41', 'j53', 'j55', 'j61', 'j62', 'j63', 'j65'],
    'defs': [
    ],
    'entries': [
      ['0',
       '- 1 / j21',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '0',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       'j41',
       '0',
       '- 1 / j21',
       '0',
       '0'],
      ['j41',
       '- j31',
       'j21',
       '0',
       '0',
       '0'],
      ['( - ( j62 - j61 * j55 * j21 + ( j55 * j41 + j31 * j21 ) * j63 - j65 * j53 * j41 ) ) / ( j65 * j21 )',
       '( j62 * j55 + j61 * j21 + ( j55 * j31 * j21 - j41 ) * j63 - j65 * j53 * j31 * j21 ) / j65',
       'j53',
       '( ( j55 ^ 2 + 1 ) * j63 - j65 * j55 * j53 ) / ( j65 * j21 )',
       'j55',
       '- ( j55 ^ 2 + 1 ) / j65'],
      ['j61',
       'j62',
       'j63',
       '- ( j65 * j53 - j63 * j55 ) / j21',
       'j65',
       '- j55'],
    ],
  },
  'm10_case22': {
    'params': ['j11', 'j31', 'j33', 'j41', 'j53', 'j61', 'j62', 'j63', 'j65'],
    'defs': [
      ('k', '- ( ( j33 + j11 ) * j65 ) / ( j33 - j11 )'),
      ('m', '( ( j33 * j11 - 1 ) * ( j33 - j11 ) ^ 2 + ( j33 + j11 ) ^ 2 * j65 ^ 2 ) / ( ( j33 + j11 ) * ( j33 - j11 ) ^ 2 )'),
    ],
    'entries': [
      ['j11',
       '- ( ( j11 ^ 2 + 1 ) / ( k ) )',
       '0',
       '0',
       '0',
       '0'],
      ['k',
       '- j11',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '( ( ( ( j33 ^ 2 + 1 ) * ( j33 - j11 ) * j41 + ( j33 + j11 ) ^ 2 * j65 * j31 ) * ( j33 - j11 ) ) / ( ( j33 + j11 ) ^ 2 * j65 ^ 2 ) )',
       'j33',
       '- ( ( j33 ^ 2 + 1 ) / ( k ) )',
       '0',
       '0'],
      ['j41',
       '- ( ( ( j33 + j11 ) * j65 * j31 + ( j33 - j11 ) ^ 2 * j41 ) / ( ( j33 + j11 ) * j65 ) )',
       'k',
       '- j33',
       '0',
       '0'],
      ['( ( j65 ^ 3 * j61 * j33 ^ 2 + 2 * j65 ^ 3 * j61 * j33 * j11 + j65 ^ 3 * j61 * j11 ^ 2 + j65 ^ 2 * j63 * j41 * j33 ^ 2 - j65 ^ 2 * j63 * j41 * j11 ^ 2 + j65 ^ 2 * j62 * j33 ^ 3 + j65 ^ 2 * j62 * j33 ^ 2 * j11 - j65 ^ 2 * j62 * j33 * j11 ^ 2 - j65 ^ 2 * j62 * j11 ^ 3 - j65 * j63 * j33 ^ 3 * j31 + j65 * j63 * j33 ^ 2 * j31 * j11 + j65 * j63 * j33 * j31 * j11 ^ 2 - j65 * j63 * j31 * j11 ^ 3 - j65 * j61 * j33 ^ 3 * j11 + j65 * j61 * j33 ^ 2 * j11 ^ 2 + j65 * j61 * j33 * j11 ^ 3 - j65 * j61 * j11 ^ 4 - j65 * j53 * j41 * j33 ^ 3 + 3 * j65 * j53 * j41 * j33 ^ 2 * j11 - 3 * j65 * j53 * j41 * j33 * j11 ^ 2 + j65 * j53 * j41 * j11 ^ 3 - j63 * j41 * j33 ^ 4 + 3 * j63 * j41 * j33 ^ 3 * j11 - 3 * j63 * j41 * j33 ^ 2 * j11 ^ 2 + j63 * j41 * j33 * j11 ^ 3 ) * ( j33 + j11 ) + ( j65 * j61 * j33 + j65 * j61 * j11 + j63 * j41 * j33 - j63 * j41 * j11 ) * ( j33 * j11 - 1 ) * ( j33 - j11 ) ^ 2 ) / ( ( j33 + j11 ) ^ 2 * ( j33 - j11 ) ^ 2 * j65 ^ 2 )',
       '( j65 ^ 4 * j62 * j33 ^ 4 + 4 * j65 ^ 4 * j62 * j33 ^ 3 * j11 + 6 * j65 ^ 4 * j62 * j33 ^ 2 * j11 ^ 2 + 4 * j65 ^ 4 * j62 * j33 * j11 ^ 3 + j65 ^ 4 * j62 * j11 ^ 4 - j65 ^ 3 * j63 * j33 ^ 4 * j31 - 2 * j65 ^ 3 * j63 * j33 ^ 3 * j31 * j11 + 2 * j65 ^ 3 * j63 * j33 * j31 * j11 ^ 3 + j65 ^ 3 * j63 * j31 * j11 ^ 4 - j65 ^ 2 * j63 * j41 * j33 ^ 5 + j65 ^ 2 * j63 * j41 * j33 ^ 4 * j11 + 2 * j65 ^ 2 * j63 * j41 * j33 ^ 3 * j11 ^ 2 - 2 * j65 ^ 2 * j63 * j41 * j33 ^ 2 * j11 ^ 3 - j65 ^ 2 * j63 * j41 * j33 * j11 ^ 4 + j65 ^ 2 * j63 * j41 * j11 ^ 5 + 2 * j65 ^ 2 * j62 * j33 ^ 5 * j11 + j65 ^ 2 * j62 * j33 ^ 4 * j11 ^ 2 - j65 ^ 2 * j62 * j33 ^ 4 - 4 * j65 ^ 2 * j62 * j33 ^ 3 * j11 ^ 3 - 2 * j65 ^ 2 * j62 * j33 ^ 2 * j11 ^ 4 + 2 * j65 ^ 2 * j62 * j33 ^ 2 * j11 ^ 2 + 2 * j65 ^ 2 * j62 * j33 * j11 ^ 5 + j65 ^ 2 * j62 * j11 ^ 6 - j65 ^ 2 * j62 * j11 ^ 4 + j65 ^ 2 * j53 * j33 ^ 5 * j31 - j65 ^ 2 * j53 * j33 ^ 4 * j31 * j11 - 2 * j65 ^ 2 * j53 * j33 ^ 3 * j31 * j11 ^ 2 + 2 * j65 ^ 2 * j53 * j33 ^ 2 * j31 * j11 ^ 3 + j65 ^ 2 * j53 * j33 * j31 * j11 ^ 4 - j65 ^ 2 * j53 * j31 * j11 ^ 5 - 2 * j65 * j63 * j33 ^ 5 * j31 * j11 + 3 * j65 * j63 * j33 ^ 4 * j31 * j11 ^ 2 + j65 * j63 * j33 ^ 4 * j31 + 2 * j65 * j63 * j33 ^ 3 * j31 * j11 ^ 3 - 2 * j65 * j63 * j33 ^ 3 * j31 * j11 - 4 * j65 * j63 * j33 ^ 2 * j31 * j11 ^ 4 + 2 * j65 * j63 * j33 * j31 * j11 ^ 3 + j65 * j63 * j31 * j11 ^ 6 - j65 * j63 * j31 * j11 ^ 4 - j65 * j61 * j33 ^ 5 * j11 ^ 2 - j65 * j61 * j33 ^ 5 + j65 * j61 * j33 ^ 4 * j11 ^ 3 + j65 * j61 * j33 ^ 4 * j11 + 2 * j65 * j61 * j33 ^ 3 * j11 ^ 4 + 2 * j65 * j61 * j33 ^ 3 * j11 ^ 2 - 2 * j65 * j61 * j33 ^ 2 * j11 ^ 5 - 2 * j65 * j61 * j33 ^ 2 * j11 ^ 3 - j65 * j61 * j33 * j11 ^ 6 - j65 * j61 * j33 * j11 ^ 4 + j65 * j61 * j11 ^ 7 + j65 * j61 * j11 ^ 5 + j65 * j53 * j41 * j33 ^ 6 - 4 * j65 * j53 * j41 * j33 ^ 5 * j11 + 5 * j65 * j53 * j41 * j33 ^ 4 * j11 ^ 2 - 5 * j65 * j53 * j41 * j33 ^ 2 * j11 ^ 4 + 4 * j65 * j53 * j41 * j33 * j11 ^ 5 - j65 * j53 * j41 * j11 ^ 6 - 2 * j63 * j41 * j33 ^ 6 * j11 + 8 * j63 * j41 * j33 ^ 5 * j11 ^ 2 - 12 * j63 * j41 * j33 ^ 4 * j11 ^ 3 - 2 * j63 * j41 * j33 ^ 4 * j11 + 8 * j63 * j41 * j33 ^ 3 * j11 ^ 4 + 8 * j63 * j41 * j33 ^ 3 * j11 ^ 2 - 2 * j63 * j41 * j33 ^ 2 * j11 ^ 5 - 12 * j63 * j41 * j33 ^ 2 * j11 ^ 3 + 8 * j63 * j41 * j33 * j11 ^ 4 - 2 * j63 * j41 * j11 ^ 5 ) / ( ( j33 + j11 ) ^ 3 * ( j33 - j11 ) ^ 2 * j65 ^ 3 )',
       'j53',
       '( ( ( j65 ^ 3 * j53 * j33 + j65 ^ 3 * j53 * j11 + j65 * j53 * j33 ^ 3 - 2 * j65 * j53 * j33 ^ 2 * j11 + j65 * j53 * j33 * j11 ^ 2 - j63 * j33 ^ 2 + 2 * j63 * j33 * j11 - j63 * j11 ^ 2 ) * ( j33 + j11 ) + ( j33 * j11 - 1 ) * ( j33 - j11 ) ^ 2 * j65 * j53 ) * ( j33 + j11 ) * ( j33 - j11 ) ^ 2 - ( ( j33 * j11 - 1 ) * ( j33 - j11 ) ^ 2 + ( j33 + j11 ) ^ 2 * j65 ^ 2 ) ^ 2 * j63 ) / ( ( j33 + j11 ) ^ 3 * ( j33 - j11 ) ^ 3 * j65 ^ 2 )',
       'm',
       '- ( ( m ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       '( - ( ( j65 ^ 2 * j63 * j33 + j65 ^ 2 * j63 * j11 - j65 * j53 * j33 ^ 2 + 2 * j65 * j53 * j33 * j11 - j65 * j53 * j11 ^ 2 - j63 * j33 ^ 3 + 2 * j63 * j33 ^ 2 * j11 - j63 * j33 * j11 ^ 2 ) * ( j33 + j11 ) + ( j33 * j11 - 1 ) * ( j33 - j11 ) ^ 2 * j63 ) ) / ( ( j33 + j11 ) ^ 2 * ( j33 - j11 ) * j65 )',
       'j65',
       '- m'],
    ],
  },
  'm14': {
    'params': ['j21', 'j31', 'j32', 'j35', 'j36', 'j41', 'j51', 'j65', 'j66'],
    'defs': [
    ],
    'entries': [
      ['0',
       '- ( ( 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '0',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       'j32',
       '( j65 ^ 2 * j36 ^ 2 + j35 ^ 2 + j66 ^ 2 * j35 ^ 2 - ( 2 * j65 * j35 + 1 ) * j66 * j36 ) / j36',
       '- ( j66 * j35 - j65 * j36 ) * j21',
       'j35',
       'j36'],
      ['j41',
       '( ( j66 * j35 - j65 * j36 ) * j32 * j21 + j51 * j36 + j35 * j31 ) / j36',
       '( ( ( j66 ^ 2 * j35 ^ 3 - 3 * j66 * j65 * j36 * j35 ^ 2 - j66 * j36 * j35 + 3 * j65 ^ 2 * j36 ^ 2 * j35 + j65 * j36 ^ 2 + j35 ^ 3 ) * j66 - ( j65 ^ 3 * j36 ^ 2 + j65 * j35 ^ 2 + j35 ) * j36 ) * j21 ) / j36 ^ 2',
       '- ( ( ( j66 * j35 - j65 * j36 ) ^ 2 ) / ( j36 ) )',
       '- ( ( ( ( j65 * j35 + 1 ) * j36 - j66 * j35 ^ 2 ) * j21 ) / ( j36 ) )',
       '( j66 * j35 - j65 * j36 ) * j21'],
      ['j51',
       '( - ( j41 * j36 + j35 * j32 + j65 * j36 * j31 * j21 - j66 * j35 * j31 * j21 ) ) / j36',
       '( - ( ( j66 * j35 - 2 * j65 * j36 ) * j66 * j35 ^ 2 + j65 ^ 2 * j36 ^ 2 * j35 - j65 * j36 ^ 2 + j35 ^ 3 ) ) / j36 ^ 2',
       '- ( ( ( ( j65 * j35 - 1 ) * j36 - j66 * j35 ^ 2 ) * j21 ) / ( j36 ) )',
       '- ( ( j35 ^ 2 ) / ( j36 ) )',
       '- j35'],
      ['( - ( j36 * j32 * j21 + j35 ^ 2 * j31 + j51 * j36 * j35 + ( j65 * j31 + j41 * j21 ) * j65 * j36 ^ 2 + ( ( j66 * j35 - 2 * j65 * j36 ) * j35 * j31 - ( j41 * j35 * j21 + j31 ) * j36 ) * j66 ) ) / j36 ^ 2',
       '( j66 * j51 * j35 + j66 * j32 * j21 - j65 * j51 * j36 + j41 * j35 * j21 + j31 ) / ( j36 * j21 )',
       '( j66 ^ 3 * j35 ^ 2 - 2 * j66 ^ 2 * j65 * j36 * j35 - j66 ^ 2 * j36 + j66 * j65 ^ 2 * j36 ^ 2 + j66 * j35 ^ 2 - j36 ) / j36 ^ 2',
       '- ( ( ( j66 ^ 2 * j35 - j66 * j65 * j36 + j35 ) * j21 ) / ( j36 ) )',
       'j65',
       'j66'],
    ],
  },
  'm5_a': {
    'params': ['j11', 'j13', 'j14', 'j21', 'j23', 'j24', 'j55', 'j61', 'j62', 'j63', 'j64', 'j65'],
    'defs': [
    ],
    'entries': [
      ['j11',
       '( - ( ( ( j65 * j23 - j65 * j14 - j55 * j24 ) * j14 + ( j23 - 2 * j14 ) * j55 * j13 ) * j65 - ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j13 - ( ( j14 ^ 2 + j13 ^ 2 ) * j21 - j23 * j13 * j11 - j24 * j14 * j11 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 )',
       'j13',
       'j14',
       '0',
       '0'],
      ['j21',
       '( - ( ( ( j65 * j23 - j65 * j14 - j55 * j24 - j55 * j13 ) * j24 + ( j23 - j14 ) * j55 * j23 ) * j65 - ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j23 + ( ( j24 * j11 - j21 * j14 ) * j24 + ( j23 * j11 - j21 * j13 ) * j23 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 )',
       'j23',
       'j24',
       '0',
       '0'],
      ['( - ( ( ( j21 * j13 - j14 * j11 - j23 * j11 ) * j21 + ( j11 ^ 2 + 1 ) * j24 ) * j65 + ( ( j55 ^ 2 + 1 ) * ( j24 + j13 ) - ( j23 - j14 ) * j65 * j55 ) * j21 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 )',
       '( - ( ( ( ( j65 ^ 2 * j23 ^ 2 - 2 * j65 ^ 2 * j23 * j14 + j65 ^ 2 * j14 ^ 2 - 2 * j65 * j55 * j24 * j23 + 2 * j65 * j55 * j24 * j14 - 2 * j65 * j55 * j23 * j13 + 2 * j65 * j55 * j14 * j13 + j65 * j24 * j21 * j13 - j65 * j23 * j21 * j14 - 2 * j65 * j23 * j13 * j11 + j55 ^ 2 * j24 ^ 2 + 2 * j55 ^ 2 * j24 * j13 - 2 * j55 ^ 2 * j23 ^ 2 + 2 * j55 ^ 2 * j23 * j14 + j55 ^ 2 * j13 ^ 2 - j55 * j24 ^ 2 * j11 + j55 * j24 * j21 * j14 - 2 * j55 * j23 ^ 2 * j11 + 2 * j55 * j23 * j21 * j13 + j55 * j13 ^ 2 * j11 + j24 ^ 2 + 2 * j24 * j13 - 2 * j23 ^ 2 + 2 * j23 * j14 + j13 ^ 2 + ( j21 * j13 + 2 * j14 * j11 ) * j65 * j13 ) * j24 + ( ( j23 - j14 ) * j65 * j55 - 2 * j55 ^ 2 * j13 - 2 * j13 ) * ( j23 - j14 ) * j23 - ( 2 * j23 ^ 2 * j11 - 2 * j23 * j21 * j13 + j21 * j14 * j13 ) * j55 * j13 + ( 2 * j23 ^ 3 * j11 - 2 * j23 ^ 2 * j21 * j13 - 2 * j23 ^ 2 * j14 * j11 + 3 * j23 * j21 * j14 * j13 - 2 * j21 * j14 ^ 2 * j13 ) * j65 ) * j55 - ( j24 ^ 2 * j11 - j24 * j21 * j14 - j24 * j13 * j11 + 2 * j23 ^ 2 * j11 - 2 * j23 * j21 * j13 + j21 * j14 * j13 ) * ( j24 + j13 ) ) * j65 + ( j55 ^ 2 + 1 ) ^ 2 * ( j24 + j13 ) ^ 2 * j23 + ( ( j23 * j11 - j21 * j13 - j14 * j11 ) * j24 + j21 * j14 ^ 2 ) * ( j23 - j14 ) * j65 ^ 3 + ( ( ( j24 * j11 ^ 2 - j24 - j21 * j14 * j11 - ( j11 ^ 2 + 1 ) * j13 ) * j23 - ( j21 * j13 * j11 + j14 * j11 ^ 2 - j14 ) * j24 + ( j21 * j14 * j13 + 2 * j14 ^ 2 * j11 + j13 ^ 2 * j11 ) * j21 ) * j24 + ( j23 ^ 2 * j11 ^ 2 - 2 * j23 * j21 * j13 * j11 + j21 ^ 2 * j13 ^ 2 + j21 * j14 * j13 * j11 + j14 ^ 2 ) * j23 - ( j14 ^ 2 + j13 ^ 2 ) * j21 ^ 2 * j14 ) * j65 ^ 2 ) ) / ( ( j24 * j13 - j23 * j14 ) ^ 2 * j65 ^ 2 )',
       '( - ( ( ( j55 ^ 2 + 1 ) * ( j24 + j13 ) - ( j23 - j14 ) * j65 * j55 ) * j23 - ( j23 ^ 2 * j11 - j23 * j21 * j13 + j21 * j14 * j13 - j24 * j13 * j11 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 )',
       '( - ( ( ( j55 ^ 2 + 1 ) * ( j24 + j13 ) - ( j23 - j14 ) * j65 * j55 ) * j24 - ( j24 * j23 * j11 - j24 * j21 * j13 - j24 * j14 * j11 + j21 * j14 ^ 2 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 )',
       '0',
       '0'],
      ['- ( ( j21 * j14 + j13 * j11 ) * j21 - ( j11 ^ 2 + 1 ) * j23 - j24 * j21 * j11 + ( j24 + j13 ) * j55 * j21 - ( j23 - j14 ) * j65 * j21 ) / ( j24 * j13 - j23 * j14 )',
       '( - ( ( ( ( j23 - j14 ) * j65 - 2 * j55 * j13 ) * ( j23 - j14 ) * j55 * j23 + ( j65 ^ 2 * j23 ^ 2 - 2 * j65 ^ 2 * j23 * j14 + j65 ^ 2 * j14 ^ 2 - 2 * j65 * j55 * j24 * j23 + 2 * j65 * j55 * j24 * j14 - 2 * j65 * j55 * j23 * j13 + 2 * j65 * j55 * j14 * j13 + j55 ^ 2 * j24 ^ 2 + 2 * j55 ^ 2 * j24 * j13 - 2 * j55 ^ 2 * j23 ^ 2 + 2 * j55 ^ 2 * j23 * j14 + j55 ^ 2 * j13 ^ 2 - 2 * j55 * j24 ^ 2 * j11 + 2 * j55 * j24 * j21 * j14 - 2 * j55 * j24 * j13 * j11 + j55 * j23 * j21 * j13 - 2 * j55 * j23 * j14 * j11 + 3 * j55 * j21 * j14 * j13 ) * j24 - ( j23 ^ 2 * j21 - j23 * j21 * j14 + 2 * j23 * j13 * j11 - 2 * j21 * j13 ^ 2 ) * j55 * j14 ) * j65 + ( j55 ^ 2 + 1 ) * ( j55 * j24 * j23 + j55 * j23 * j13 - j24 * j23 * j11 + j23 * j21 * j14 - j23 * j13 * j11 + j21 * j13 ^ 2 ) * ( j24 + j13 ) + ( 2 * ( j24 * j11 - j21 * j14 ) * j24 + ( j23 * j11 - j21 * j13 ) * ( j23 + j14 ) ) * ( j23 - j14 ) * j65 ^ 2 - ( ( ( j23 * j14 * j11 - j21 * j14 * j13 + j14 ^ 2 * j11 + 2 * j13 ^ 2 * j11 ) * j21 - ( j11 + 1 ) * ( j11 - 1 ) * j23 * j13 ) * j23 - ( j14 ^ 2 + j13 ^ 2 ) * j21 ^ 2 * j13 - ( j24 ^ 2 * j11 ^ 2 - 2 * j24 * j21 * j14 * j11 + j23 ^ 2 * j11 ^ 2 - j23 ^ 2 - j23 * j21 * j13 * j11 + j23 * j14 * j11 ^ 2 + j23 * j14 + j21 ^ 2 * j14 ^ 2 - j21 * j14 * j13 * j11 + j13 ^ 2 ) * j24 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) ^ 2 * j65 )',
       '- ( j23 * j21 * j14 - j23 * j13 * j11 + j21 * j13 ^ 2 - j24 * j23 * j11 + ( j24 + j13 ) * j55 * j23 - ( j23 - j14 ) * j65 * j23 ) / ( j24 * j13 - j23 * j14 )',
       '( ( j24 * j11 - j21 * j14 ) * j24 + ( j23 * j11 - j21 * j13 ) * j14 - ( j24 + j13 ) * j55 * j24 + ( j23 - j14 ) * j65 * j24 ) / ( j24 * j13 - j23 * j14 )',
       '0',
       '0'],
      ['( ( ( ( j55 - j11 ) * j61 - j62 * j21 ) * ( j24 * j13 - j23 * j14 ) - ( j23 - j14 ) * j63 * j55 * j21 + ( ( j21 * j13 - j14 * j11 - j23 * j11 ) * j21 + ( j11 ^ 2 + 1 ) * j24 ) * j63 ) * j65 + ( ( j21 * j14 + j13 * j11 ) * j21 - ( j11 ^ 2 + 1 ) * j23 - j24 * j21 * j11 ) * j65 * j64 - ( ( j65 * j23 - j65 * j14 - j55 * j24 - j55 * j13 ) * j65 * j64 - ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j63 ) * j21 ) / ( ( j24 * j13 - j23 * j14 ) * j65 ^ 2 )',
       '( ( ( ( j23 - j14 ) * j65 - 2 * j55 * j13 ) * ( j23 - j14 ) * j65 * j55 * j23 + j65 ^ 3 * j24 * j23 ^ 2 - 2 * j65 ^ 3 * j24 * j23 * j14 + j65 ^ 3 * j24 * j14 ^ 2 - 2 * j65 ^ 2 * j55 * j24 ^ 2 * j23 + 2 * j65 ^ 2 * j55 * j24 ^ 2 * j14 - 2 * j65 ^ 2 * j55 * j24 * j23 * j13 + 2 * j65 ^ 2 * j55 * j24 * j14 * j13 + j65 * j55 ^ 2 * j24 ^ 3 + 2 * j65 * j55 ^ 2 * j24 ^ 2 * j13 - 2 * j65 * j55 ^ 2 * j24 * j23 ^ 2 + 2 * j65 * j55 ^ 2 * j24 * j23 * j14 + j65 * j55 ^ 2 * j24 * j13 ^ 2 - 2 * j65 * j55 * j24 ^ 3 * j11 + 2 * j65 * j55 * j24 ^ 2 * j21 * j14 - 2 * j65 * j55 * j24 ^ 2 * j13 * j11 + j65 * j55 * j24 * j23 * j21 * j13 - 2 * j65 * j55 * j24 * j23 * j14 * j11 + 3 * j65 * j55 * j24 * j21 * j14 * j13 + j55 ^ 3 * j24 ^ 2 * j23 + 2 * j55 ^ 3 * j24 * j23 * j13 + j55 ^ 3 * j23 * j13 ^ 2 - j55 ^ 2 * j24 ^ 2 * j23 * j11 + j55 ^ 2 * j24 * j23 * j21 * j14 - 2 * j55 ^ 2 * j24 * j23 * j13 * j11 + j55 ^ 2 * j24 * j21 * j13 ^ 2 + j55 * j24 ^ 2 * j23 + 2 * j55 * j24 * j23 * j13 + j55 * j23 * j13 ^ 2 + ( j23 * j21 * j14 - j23 * j13 * j11 + j21 * j13 ^ 2 ) * j55 ^ 2 * j13 - ( j23 ^ 2 * j21 - j23 * j21 * j14 + 2 * j23 * j13 * j11 - 2 * j21 * j13 ^ 2 ) * j65 * j55 * j14 - ( j24 * j23 * j11 - j23 * j21 * j14 + j23 * j13 * j11 - j21 * j13 ^ 2 ) * ( j24 + j13 ) ) * j65 * j64 + ( j55 ^ 2 + 1 ) ^ 2 * ( j24 + j13 ) ^ 2 * j63 * j23 + ( 2 * ( j24 * j11 - j21 * j14 ) * j24 + ( j23 * j11 - j21 * j13 ) * ( j23 + j14 ) ) * ( j23 - j14 ) * j65 ^ 3 * j64 - ( ( j62 * j23 + j61 * j13 ) * ( j24 * j13 - j23 * j14 ) - ( j55 * j24 ^ 2 + j55 * j24 * j13 - 2 * j55 * j23 ^ 2 + 2 * j55 * j23 * j14 - j24 ^ 2 * j11 + j24 * j21 * j14 + j24 * j13 * j11 - 2 * j23 ^ 2 * j11 + 2 * j23 * j21 * j13 - j21 * j14 * j13 ) * j63 ) * ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j65 + ( ( j62 * j24 + j61 * j14 ) * ( j24 * j13 - j23 * j14 ) + ( j23 - j14 ) * j63 * j55 * j24 + ( ( j23 * j11 - j21 * j13 - j14 * j11 ) * j24 + j21 * j14 ^ 2 ) * j63 ) * ( j23 - j14 ) * j65 ^ 3 - ( ( ( j23 * j14 * j11 - j21 * j14 * j13 + j14 ^ 2 * j11 + 2 * j13 ^ 2 * j11 ) * j21 - ( j11 + 1 ) * ( j11 - 1 ) * j23 * j13 ) * j23 - ( j14 ^ 2 + j13 ^ 2 ) * j21 ^ 2 * j13 - ( j24 ^ 2 * j11 ^ 2 - 2 * j24 * j21 * j14 * j11 + j23 ^ 2 * j11 ^ 2 - j23 ^ 2 - j23 * j21 * j13 * j11 + j23 * j14 * j11 ^ 2 + j23 * j14 + j21 ^ 2 * j14 ^ 2 - j21 * j14 * j13 * j11 + j13 ^ 2 ) * j24 ) * j65 ^ 2 * j64 - ( ( ( 2 * j55 * j24 * j23 - 2 * j55 * j24 * j14 + 2 * j55 * j23 * j13 - 2 * j55 * j14 * j13 - j24 * j21 * j13 + j23 * j21 * j14 + 2 * j23 * j13 * j11 - ( j21 * j13 + 2 * j14 * j11 ) * j13 ) * j24 - ( j23 - j14 ) ^ 2 * j55 * j23 - ( 2 * j23 ^ 3 * j11 - 2 * j23 ^ 2 * j21 * j13 - 2 * j23 ^ 2 * j14 * j11 + 3 * j23 * j21 * j14 * j13 - 2 * j21 * j14 ^ 2 * j13 ) ) * j63 * j55 - ( ( j24 ^ 2 * j11 - j24 * j21 * j14 + j23 ^ 2 * j11 - j23 * j21 * j13 - ( j24 ^ 2 - j23 ^ 2 + 2 * j23 * j14 ) * j55 ) * j62 + ( j24 * j14 * j11 + j23 * j13 * j11 - j21 * j14 ^ 2 - j21 * j13 ^ 2 - ( j24 * j14 - j23 * j13 + 2 * j14 * j13 ) * j55 ) * j61 ) * ( j24 * j13 - j23 * j14 ) - ( ( ( j24 * j11 ^ 2 - j24 - j21 * j14 * j11 - ( j11 ^ 2 + 1 ) * j13 ) * j23 - ( j21 * j13 * j11 + j14 * j11 ^ 2 - j14 ) * j24 + ( j21 * j14 * j13 + 2 * j14 ^ 2 * j11 + j13 ^ 2 * j11 ) * j21 ) * j24 + ( j23 ^ 2 * j11 ^ 2 - 2 * j23 * j21 * j13 * j11 + j21 ^ 2 * j13 ^ 2 + j21 * j14 * j13 * j11 + j14 ^ 2 ) * j23 - ( j14 ^ 2 + j13 ^ 2 ) * j21 ^ 2 * j14 ) * j63 ) * j65 ^ 2 ) / ( ( j24 * j13 - j23 * j14 ) ^ 2 * j65 ^ 3 )',
       '( - ( ( ( j65 * j23 - j65 * j14 - j55 * j24 - j55 * j13 ) * j65 * j64 - ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j63 ) * j23 - ( j23 * j21 * j14 - j23 * j13 * j11 + j21 * j13 ^ 2 - j24 * j23 * j11 ) * j65 * j64 + ( ( j62 * j23 + j61 * j13 ) * ( j24 * j13 - j23 * j14 ) - ( j24 * j13 - j23 ^ 2 ) * j63 * j55 + ( j23 ^ 2 * j11 - j23 * j21 * j13 + j21 * j14 * j13 - j24 * j13 * j11 ) * j63 ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 ^ 2 )',
       '( - ( ( j65 * j24 * j23 - j65 * j24 * j14 - j55 * j24 ^ 2 - 2 * j55 * j24 * j13 + j55 * j23 * j14 ) * j65 * j64 - ( j55 ^ 2 + 1 ) * ( j24 + j13 ) * j63 * j24 + ( ( j24 * j11 - j21 * j14 ) * j24 + ( j23 * j11 - j21 * j13 ) * j14 ) * j65 * j64 + ( ( j24 * j23 * j11 - j24 * j21 * j13 - j24 * j14 * j11 + j21 * j14 ^ 2 + ( j23 - j14 ) * j55 * j24 ) * j63 + ( j62 * j24 + j61 * j14 ) * ( j24 * j13 - j23 * j14 ) ) * j65 ) ) / ( ( j24 * j13 - j23 * j14 ) * j65 ^ 2 )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'm5_b': {
    'params': ['j21', 'j22', 'j23', 'j33', 'j34', 'j55', 'j61', 'j62', 'j63', 'j64', 'j65'],
    'defs': [
    ],
    'entries': [
      ['( - ( ( j55 ^ 2 + 1 ) * ( j33 + j22 ) + j65 * j22 * j21 + ( j34 * j22 + j33 * j21 + ( j34 + j21 ) * j55 ) * j65 ) ) / ( j65 * j21 )',
       '( - ( ( j33 + j22 ) * j22 - j34 * j21 - ( j33 + j22 ) * j55 - ( j34 + j21 ) * j65 ) ) / j21',
       '- ( ( ( j33 + j22 ) * j23 ) / ( j21 ) )',
       '- ( ( j34 * j23 ) / ( j21 ) )',
       '0',
       '0'],
      ['j21',
       'j22',
       'j23',
       '0',
       '0',
       '0'],
      ['( ( j34 * j22 + j33 * j21 + ( j34 + j21 ) * j55 ) * j65 + ( j55 ^ 2 + 1 ) * ( j33 + j22 ) ) / ( j65 * j23 )',
       '( - ( j65 * j34 + j65 * j21 + j55 * j33 + j55 * j22 + j34 * j21 - j33 * j22 + 1 ) ) / j23',
       'j33',
       'j34',
       '0',
       '0'],
      ['( ( ( ( j33 + j22 ) * j55 + 2 * j65 * j21 + 2 * j55 ^ 2 + 2 ) * ( j33 + j22 ) * j55 * j21 + j65 ^ 2 * j34 * j21 ^ 2 + j65 ^ 2 * j21 ^ 3 + j65 * j55 ^ 2 * j34 ^ 2 + 2 * j65 * j55 ^ 2 * j34 * j21 + j65 * j55 ^ 2 * j21 ^ 2 + 2 * j65 * j55 * j34 ^ 2 * j22 + j65 * j55 * j34 * j33 * j21 + 3 * j65 * j55 * j34 * j22 * j21 + 2 * j55 ^ 3 * j34 * j33 + 2 * j55 ^ 3 * j34 * j22 + 2 * j55 ^ 2 * j34 * j33 * j22 + 2 * j55 ^ 2 * j34 * j22 ^ 2 + 2 * j55 * j34 * j33 + 2 * j55 * j34 * j22 ) * j65 + ( j55 ^ 2 + 1 ) ^ 2 * ( j33 + j22 ) ^ 2 + ( ( j33 + j22 ) * j21 + 2 * j34 * j22 ) * ( j33 + j22 ) * j65 + ( j34 ^ 2 * j22 ^ 2 + j34 * j33 * j22 * j21 + j21 ^ 2 + ( j22 ^ 2 + j21 ^ 2 ) * j34 * j21 ) * j65 ^ 2 ) / ( j65 ^ 2 * j34 * j23 * j21 )',
       '( - ( j65 ^ 2 * j55 * j34 ^ 2 + 2 * j65 ^ 2 * j55 * j34 * j21 + j65 ^ 2 * j55 * j21 ^ 2 + j65 ^ 2 * j34 ^ 2 * j22 - j65 ^ 2 * j22 * j21 ^ 2 + 2 * j65 * j55 ^ 2 * j34 * j33 + 2 * j65 * j55 ^ 2 * j34 * j22 + 2 * j65 * j55 ^ 2 * j33 * j21 + 2 * j65 * j55 ^ 2 * j22 * j21 + j65 * j55 * j34 ^ 2 * j21 + j65 * j55 * j34 * j21 ^ 2 - 2 * j65 * j55 * j33 * j22 * j21 - 2 * j65 * j55 * j22 ^ 2 * j21 + j65 * j34 ^ 2 * j22 * j21 - j65 * j34 * j33 * j22 ^ 2 + j65 * j34 * j33 - j65 * j34 * j22 ^ 3 - j65 * j34 * j22 * j21 ^ 2 + j65 * j34 * j22 + j55 ^ 3 * j33 ^ 2 + 2 * j55 ^ 3 * j33 * j22 + j55 ^ 3 * j22 ^ 2 + j55 ^ 2 * j34 * j33 * j21 + j55 ^ 2 * j34 * j22 * j21 - j55 ^ 2 * j33 ^ 2 * j22 - 2 * j55 ^ 2 * j33 * j22 ^ 2 - j55 ^ 2 * j22 ^ 3 + j55 * j33 ^ 2 + 2 * j55 * j33 * j22 + j55 * j22 ^ 2 + j34 * j33 * j21 + j34 * j22 * j21 - j33 ^ 2 * j22 - 2 * j33 * j22 ^ 2 - j22 ^ 3 ) ) / ( j65 * j34 * j23 * j21 )',
       '( ( j65 * j34 * j21 + j65 * j21 ^ 2 + j55 * j34 * j33 + j55 * j34 * j22 + 2 * ( j33 + j22 ) * j55 * j21 ) * j65 + ( j55 ^ 2 + 1 ) * ( j33 + j22 ) ^ 2 + ( j22 ^ 2 + j21 ^ 2 + j33 * j22 ) * j65 * j34 ) / ( j65 * j34 * j21 )',
       '( ( j55 ^ 2 + 1 ) * ( j33 + j22 ) + ( j55 * j34 + j55 * j21 + j34 * j22 ) * j65 ) / ( j65 * j21 )',
       '0',
       '0'],
      ['( - ( ( ( ( ( j62 * j21 - j61 * j55 ) * j65 * j23 + ( j55 ^ 2 + 1 ) * ( j33 + j22 ) * j63 ) * j21 + ( j34 * j22 + j33 * j21 + ( j34 + j21 ) * j55 ) * ( j63 * j21 - j61 * j23 ) * j65 ) * j34 + ( j34 ^ 2 * j22 ^ 2 + j34 * j33 * j22 * j21 + j21 ^ 2 + ( j22 ^ 2 + j21 ^ 2 ) * j34 * j21 ) * j65 * j64 - ( ( j55 ^ 2 + 1 ) * ( j33 + j22 ) + j65 * j22 * j21 ) * j61 * j34 * j23 ) * j65 + ( ( ( ( j33 + j22 ) * j55 + 2 * j65 * j21 + 2 * j55 ^ 2 + 2 ) * ( j33 + j22 ) * j55 * j21 + j65 ^ 2 * j34 * j21 ^ 2 + j65 ^ 2 * j21 ^ 3 + j65 * j55 ^ 2 * j34 ^ 2 + 2 * j65 * j55 ^ 2 * j34 * j21 + j65 * j55 ^ 2 * j21 ^ 2 + 2 * j65 * j55 * j34 ^ 2 * j22 + j65 * j55 * j34 * j33 * j21 + 3 * j65 * j55 * j34 * j22 * j21 + 2 * j55 ^ 3 * j34 * j33 + 2 * j55 ^ 3 * j34 * j22 + 2 * j55 ^ 2 * j34 * j33 * j22 + 2 * j55 ^ 2 * j34 * j22 ^ 2 + 2 * j55 * j34 * j33 + 2 * j55 * j34 * j22 ) * j65 + ( j55 ^ 2 + 1 ) ^ 2 * ( j33 + j22 ) ^ 2 + ( ( j33 + j22 ) * j21 + 2 * j34 * j22 ) * ( j33 + j22 ) * j65 ) * j64 ) ) / ( j65 ^ 3 * j34 * j23 * j21 )',
       '( ( ( ( j65 * j34 ^ 2 + 2 * j65 * j34 * j21 + j65 * j21 ^ 2 + 2 * j55 * j34 * j33 + 2 * j55 * j34 * j22 + j34 ^ 2 * j21 + j34 * j21 ^ 2 + 2 * ( j55 - j22 ) * ( j33 + j22 ) * j21 ) * j55 + ( j34 + j21 ) * ( j34 - j21 ) * j65 * j22 ) * j65 + ( j55 ^ 2 + 1 ) * ( j55 * j33 + j55 * j22 + j34 * j21 - j33 * j22 - j22 ^ 2 ) * ( j33 + j22 ) ) * j64 + ( j63 * j21 - j61 * j23 ) * ( j34 + j21 ) * j65 ^ 2 * j34 + ( j34 * j22 * j21 - j33 * j22 ^ 2 + j33 - ( j22 ^ 2 + j21 ^ 2 - 1 ) * j22 ) * j65 * j64 * j34 - ( ( ( j34 * j21 - j33 * j22 - j22 ^ 2 + ( j33 + j22 ) * j55 ) * j61 - ( j55 - j22 ) * j62 * j21 ) * j23 - ( j34 * j21 - j33 * j22 + 1 + ( j33 + j22 ) * j55 ) * j63 * j21 ) * j65 * j34 ) / ( j65 ^ 2 * j34 * j23 * j21 )',
       '( - ( j65 ^ 2 * j64 * j34 * j21 + j65 ^ 2 * j64 * j21 ^ 2 + j65 * j64 * j55 * j34 * j33 + j65 * j64 * j55 * j34 * j22 + 2 * j65 * j64 * j55 * j33 * j21 + 2 * j65 * j64 * j55 * j22 * j21 + j65 * j64 * j34 * j33 * j22 + j65 * j64 * j34 * j22 ^ 2 + j65 * j64 * j34 * j21 ^ 2 - j65 * j63 * j55 * j34 * j21 + j65 * j63 * j34 * j33 * j21 + j65 * j62 * j34 * j23 * j21 - j65 * j61 * j34 * j33 * j23 - j65 * j61 * j34 * j23 * j22 + j64 * j55 ^ 2 * j33 ^ 2 + 2 * j64 * j55 ^ 2 * j33 * j22 + j64 * j55 ^ 2 * j22 ^ 2 + j64 * j33 ^ 2 + 2 * j64 * j33 * j22 + j64 * j22 ^ 2 ) ) / ( j65 ^ 2 * j34 * j21 )',
       '( - ( j65 * j64 * j55 * j34 + j65 * j64 * j34 * j22 + j65 * j63 * j34 * j21 - j65 * j61 * j34 * j23 + j64 * j55 ^ 2 * j33 + j64 * j55 ^ 2 * j22 + j64 * j33 + j64 * j22 ) ) / ( j65 ^ 2 * j21 )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'm5_c': {
    'params': ['j21', 'j22', 'j31', 'j33', 'j34', 'j41', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['- j22',
       '- ( ( j22 ^ 2 + 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       'j22',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '( j22 * j31 - j33 * j31 - j34 * j41 ) / j21',
       'j33',
       'j34',
       '0',
       '0'],
      ['j41',
       '( ( j41 * j34 * j33 + j41 * j34 * j22 + j33 ^ 2 * j31 + j31 ) / ( j34 * j21 ) )',
       '- ( ( j33 ^ 2 + 1 ) / ( j34 ) )',
       '- j33',
       '0',
       '0'],
      ['( j64 * j41 * j34 ^ 2 * j21 + j64 * j41 * j34 * j22 ^ 2 + j64 * j41 * j34 * j21 ^ 2 + j64 * j41 * j34 + j64 * j41 * j33 ^ 2 * j21 + j64 * j41 * j21 + j63 * j34 ^ 2 * j31 * j21 + j63 * j34 * j31 * j22 ^ 2 + j63 * j34 * j31 * j21 ^ 2 + j63 * j34 * j31 + j63 * j33 ^ 2 * j31 * j21 + j63 * j31 * j21 + j62 * j34 ^ 2 * j21 ^ 2 + j62 * j34 * j22 ^ 2 * j21 + j62 * j34 * j21 ^ 3 + j62 * j34 * j21 + j62 * j33 ^ 2 * j21 ^ 2 + j62 * j21 ^ 2 - j61 * j34 * j33 * j22 ^ 2 + j61 * j34 * j33 * j21 ^ 2 - j61 * j34 * j33 - j61 * j34 * j22 ^ 3 - j61 * j34 * j22 * j21 ^ 2 - j61 * j34 * j22 - 2 * j61 * j33 ^ 2 * j22 * j21 - 2 * j61 * j22 * j21 ) / ( j34 ^ 2 * j21 ^ 2 - 2 * j34 * j21 * ( j33 * j22 - 1 ) + ( j22 ^ 2 + 1 ) * ( j33 ^ 2 + 1 ) )',
       '( j64 * j41 * j34 ^ 3 * j33 * j21 + j64 * j41 * j34 ^ 3 * j22 * j21 + j64 * j41 * j34 ^ 2 * j33 * j22 ^ 2 + j64 * j41 * j34 ^ 2 * j33 * j21 ^ 2 + j64 * j41 * j34 ^ 2 * j33 + j64 * j41 * j34 ^ 2 * j22 ^ 3 + j64 * j41 * j34 ^ 2 * j22 * j21 ^ 2 + j64 * j41 * j34 ^ 2 * j22 + j64 * j41 * j34 * j33 ^ 3 * j21 + j64 * j41 * j34 * j33 ^ 2 * j22 * j21 + j64 * j41 * j34 * j33 * j21 + j64 * j41 * j34 * j22 * j21 + j64 * j34 ^ 2 * j33 ^ 2 * j31 * j21 + j64 * j34 ^ 2 * j31 * j21 + j64 * j34 * j33 ^ 2 * j31 * j22 ^ 2 + j64 * j34 * j33 ^ 2 * j31 * j21 ^ 2 + j64 * j34 * j33 ^ 2 * j31 + j64 * j34 * j31 * j22 ^ 2 + j64 * j34 * j31 * j21 ^ 2 + j64 * j34 * j31 + j64 * j33 ^ 4 * j31 * j21 + 2 * j64 * j33 ^ 2 * j31 * j21 + j64 * j31 * j21 - j63 * j41 * j34 ^ 4 * j21 - j63 * j41 * j34 ^ 3 * j22 ^ 2 - j63 * j41 * j34 ^ 3 * j21 ^ 2 - j63 * j41 * j34 ^ 3 - j63 * j41 * j34 ^ 2 * j33 ^ 2 * j21 - j63 * j41 * j34 ^ 2 * j21 - j63 * j34 ^ 3 * j33 * j31 * j21 + j63 * j34 ^ 3 * j31 * j22 * j21 - j63 * j34 ^ 2 * j33 * j31 * j22 ^ 2 - j63 * j34 ^ 2 * j33 * j31 * j21 ^ 2 - j63 * j34 ^ 2 * j33 * j31 + j63 * j34 ^ 2 * j31 * j22 ^ 3 + j63 * j34 ^ 2 * j31 * j22 * j21 ^ 2 + j63 * j34 ^ 2 * j31 * j22 - j63 * j34 * j33 ^ 3 * j31 * j21 + j63 * j34 * j33 ^ 2 * j31 * j22 * j21 - j63 * j34 * j33 * j31 * j21 + j63 * j34 * j31 * j22 * j21 + 2 * j62 * j34 ^ 3 * j22 * j21 ^ 2 - j62 * j34 ^ 2 * j33 * j22 ^ 2 * j21 + j62 * j34 ^ 2 * j33 * j21 ^ 3 - j62 * j34 ^ 2 * j33 * j21 + j62 * j34 ^ 2 * j22 ^ 3 * j21 + j62 * j34 ^ 2 * j22 * j21 ^ 3 + j62 * j34 ^ 2 * j22 * j21 - j61 * j34 ^ 3 * j22 ^ 2 * j21 - j61 * j34 ^ 3 * j21 - j61 * j34 ^ 2 * j22 ^ 4 - j61 * j34 ^ 2 * j22 ^ 2 * j21 ^ 2 - 2 * j61 * j34 ^ 2 * j22 ^ 2 - j61 * j34 ^ 2 * j21 ^ 2 - j61 * j34 ^ 2 - j61 * j34 * j33 ^ 2 * j22 ^ 2 * j21 - j61 * j34 * j33 ^ 2 * j21 - j61 * j34 * j22 ^ 2 * j21 - j61 * j34 * j21 ) / ( j34 * j21 * ( j34 ^ 2 * j21 ^ 2 - 2 * j34 * j21 * ( j33 * j22 - 1 ) + ( j22 ^ 2 + 1 ) * ( j33 ^ 2 + 1 ) ) )',
       '( - j64 * j34 ^ 2 * j33 ^ 2 * j21 - j64 * j34 ^ 2 * j21 - j64 * j34 * j33 ^ 2 * j22 ^ 2 - j64 * j34 * j33 ^ 2 * j21 ^ 2 - j64 * j34 * j33 ^ 2 - j64 * j34 * j22 ^ 2 - j64 * j34 * j21 ^ 2 - j64 * j34 - j64 * j33 ^ 4 * j21 - 2 * j64 * j33 ^ 2 * j21 - j64 * j21 + j63 * j34 ^ 3 * j33 * j21 + j63 * j34 ^ 3 * j22 * j21 + 2 * j63 * j34 ^ 2 * j33 * j21 ^ 2 + j63 * j34 * j33 ^ 3 * j21 - j63 * j34 * j33 ^ 2 * j22 * j21 + j63 * j34 * j33 * j21 - j63 * j34 * j22 * j21 ) / ( j34 * ( j34 ^ 2 * j21 ^ 2 - 2 * j34 * j21 * ( j33 * j22 - 1 ) + ( j22 ^ 2 + 1 ) * ( j33 ^ 2 + 1 ) ) )',
       '( - j64 * j34 ^ 2 * j33 * j21 + j64 * j34 ^ 2 * j22 * j21 - 2 * j64 * j34 * j33 * j22 ^ 2 - 2 * j64 * j34 * j33 - j64 * j33 ^ 3 * j21 - j64 * j33 ^ 2 * j22 * j21 - j64 * j33 * j21 - j64 * j22 * j21 + j63 * j34 ^ 3 * j21 + j63 * j34 ^ 2 * j22 ^ 2 + j63 * j34 ^ 2 * j21 ^ 2 + j63 * j34 ^ 2 + j63 * j34 * j33 ^ 2 * j21 + j63 * j34 * j21 ) / ( j34 ^ 2 * j21 ^ 2 - 2 * j34 * j21 * ( j33 * j22 - 1 ) + ( j22 ^ 2 + 1 ) * ( j33 ^ 2 + 1 ) )',
       '( - j34 ^ 2 * j22 * j21 + j34 * j33 * j22 ^ 2 - j34 * j33 * j21 ^ 2 + j34 * j33 + j33 ^ 2 * j22 * j21 + j22 * j21 ) / ( j34 ^ 2 * j21 + j34 * ( j22 ^ 2 + j21 ^ 2 + 1 ) + ( j33 ^ 2 + 1 ) * j21 )',
       '( j34 ^ 2 * j22 ^ 2 + j34 ^ 2 + 2 * j34 * j33 * j22 * j21 + 2 * j34 * j21 + j33 ^ 2 * j21 ^ 2 + j21 ^ 2 ) / ( j34 ^ 2 * j21 + j34 * ( j22 ^ 2 + j21 ^ 2 + 1 ) + ( j33 ^ 2 + 1 ) * j21 )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '( - j34 ^ 2 * j21 ^ 2 + 2 * j34 * j33 * j22 * j21 - 2 * j34 * j21 - j33 ^ 2 * j22 ^ 2 - j33 ^ 2 - j22 ^ 2 - 1 ) / ( j34 ^ 2 * j21 + j34 * ( j22 ^ 2 + j21 ^ 2 + 1 ) + ( j33 ^ 2 + 1 ) * j21 )',
       '( j34 ^ 2 * j22 * j21 - j34 * j33 * j22 ^ 2 + j34 * j33 * j21 ^ 2 - j34 * j33 - j33 ^ 2 * j22 * j21 - j22 * j21 ) / ( j34 ^ 2 * j21 + j34 * ( j22 ^ 2 + j21 ^ 2 + 1 ) + ( j33 ^ 2 + 1 ) * j21 )'],
    ],
  },
  'm5_d': {
    'params': [],
    'defs': [
    ],
    'entries': [
      ['0',
       '- ( ( 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       '0',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       'j41',
       '0',
       '- j21',
       '0',
       '0'],
      ['j41',
       '- j31',
       '( ( 1 ) / ( j21 ) )',
       '0',
       '0',
       '0'],
      ['( ( - j64 * j41 - j63 * j31 - j62 * j21 + j61 * j55 ) / ( j65 ) )',
       '( ( j64 * j31 * j21 - j63 * j41 * j21 + j62 * j55 * j21 + j61 ) / ( j65 * j21 ) )',
       '( ( - j64 + j63 * j55 * j21 ) / ( j65 * j21 ) )',
       '( ( j64 * j55 + j63 * j21 ) / ( j65 ) )',
       'j55',
       '- ( ( j55 ^ 2 + 1 ) / ( j65 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       'j65',
       '- j55'],
    ],
  },
  'm5_e': {
    'params': ['j21', 'j22', 'j31', 'j34', 'j41', 'j61', 'j62', 'j63', 'j64'],
    'defs': [
    ],
    'entries': [
      ['- j22',
       '- ( ( j22 ^ 2 + 1 ) / ( j21 ) )',
       '0',
       '0',
       '0',
       '0'],
      ['j21',
       'j22',
       '0',
       '0',
       '0',
       '0'],
      ['j31',
       '- ( ( j41 * j34 - 2 * j31 * j22 ) / ( j21 ) )',
       '- j22',
       'j34',
       '0',
       '0'],
      ['j41',
       '( ( j31 * ( j22 ^ 2 + 1 ) ) / ( j34 * j21 ) )',
       '- ( ( j22 ^ 2 + 1 ) / ( j34 ) )',
       'j22',
       '0',
       '0'],
      ['( j64 * j41 * j34 + j64 * j41 * j21 + j63 * j34 * j31 + j63 * j31 * j21 + j62 * j34 * j21 + j62 * j21 ^ 2 - 2 * j61 * j22 * j21 ) / ( j34 * j21 + j22 ^ 2 + 1 )',
       '( j64 * j34 * j31 * j22 ^ 2 + j64 * j34 * j31 + j64 * j31 * j22 ^ 2 * j21 + j64 * j31 * j21 - j63 * j41 * j34 ^ 3 - j63 * j41 * j34 ^ 2 * j21 + 2 * j63 * j34 ^ 2 * j31 * j22 + 2 * j63 * j34 * j31 * j22 * j21 + 2 * j62 * j34 ^ 2 * j22 * j21 - j61 * j34 ^ 2 * j22 ^ 2 - j61 * j34 ^ 2 - j61 * j34 * j22 ^ 2 * j21 - j61 * j34 * j21 ) / ( j34 * j21 * ( j34 * j21 + j22 ^ 2 + 1 ) )',
       '( - j64 * j34 * j22 ^ 2 - j64 * j34 - j64 * j22 ^ 2 * j21 - j64 * j21 - 2 * j63 * j34 * j22 * j21 ) / ( j34 * ( j34 * j21 + j22 ^ 2 + 1 ) )',
       '( j34 * ( 2 * j64 * j22 + j63 * j34 + j63 * j21 ) ) / ( j34 * j21 + j22 ^ 2 + 1 )',
       '( ( j22 * ( - j34 + j21 ) ) / ( j34 + j21 ) )',
       '( ( j34 ^ 2 * j22 ^ 2 + j34 ^ 2 - 2 * j34 * j22 ^ 2 * j21 + 2 * j34 * j21 + j22 ^ 2 * j21 ^ 2 + j21 ^ 2 ) / ( j34 ^ 2 * j21 + j34 * j22 ^ 2 + j34 * j21 ^ 2 + j34 + j22 ^ 2 * j21 + j21 ) )'],
      ['j61',
       'j62',
       'j63',
       'j64',
       '- ( ( j34 * j21 + j22 ^ 2 + 1 ) / ( j34 + j21 ) )',
       '( ( j22 * ( j34 - j21 ) ) / ( j34 + j21 ) )'],
    ],
  },
}
