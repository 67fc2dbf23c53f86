"""Holomorphic-chart and multiplication formulas (machine-converted data)."""

CHART_SRC = {
    'g61a_chi3':
        '( ( 1 ) / ( 8 ) ) * f1x * ( ( conj ( f1a ) + f1a ) * ( ( 1 - i ) * alpha - 1 ) - alpha * conj ( f2a ) + ( ( alpha * ( 1 - alpha + 2 * i * alpha ) ) / ( alpha - 1 ) ) * f2a ) + ( ( 1 ) / ( 8 ) ) * f2x * ( 2 * ( ( i * alpha ) / ( 1 - i ) ) * conj ( f1a ) + alpha * conj ( f2a ) + 2 * ( ( alpha * ( 1 + i * alpha ) ) / ( ( alpha - 1 ) * ( 1 - i ) ) ) * f1a + alpha * ( ( ( 1 - 2 * i ) * alpha ^ 2 - 1 ) / ( ( alpha - 1 ) ^ 2 ) ) * f2a )',
    'g61a_chi3_eq1':
        '( ( 1 ) / ( 32 ) ) * f1x * ( - 4 * i * conj ( f1a ) + 2 * i * f1a - 4 * conj ( f2a ) + 3 * i * f2a ) + ( ( 1 ) / ( 64 ) ) * f2x * ( 8 * ( i - 1 ) * conj ( f1a ) + 8 * conj ( f2a ) - 2 * i * f1a + ( 4 - 5 * i ) * f2a )',
    'g61a_phi3':
        'w3 - ( ( alpha * i ) / ( 2 * ( alpha - 1 ) ) ) * conj ( w1 ) * w2 - ( ( 1 + i * alpha ) / ( 8 ) ) * ( conj ( w2 ) ) ^ 2 + ( ( 1 - alpha + i * alpha * ( 1 + alpha ) ) / ( 4 * ( alpha - 1 ) ) ) * conj ( w2 ) * w2 + ( ( i * alpha ) / ( 2 * ( alpha - 1 ) ) ) * w1 * w2 + ( ( 3 * alpha ^ 2 - 2 * alpha - 1 - i * alpha * ( alpha + 1 ) ^ 2 ) / ( 8 * ( alpha - 1 ) ^ 2 ) ) * ( w2 ) ^ 2',
    'g61a_phi3_eq1':
        'w3 + ( 1 / 32 ) * ( 4 * i * ( conj ( w1 ) ) ^ 2 - 8 * i * conj ( w1 ) * conj ( w2 ) - 8 * i * conj ( w1 ) * w1 - 8 * ( 2 - i ) * conj ( w1 ) * w2 - ( 4 + i ) * ( conj ( w2 ) ) ^ 2 + 4 * i * conj ( w2 ) * w1 + 4 * i * conj ( w2 ) * w2 )',
    'g61b_chi3':
        '( ( 1 ) / ( 4 ) ) * f1x * ( 2 * i * conj ( f1a ) - i * f1a + 2 * conj ( f2a ) ) + ( ( 1 ) / ( 2 ) ) * f2x * conj ( f1a )',
    'g61b_phi3':
        'w3 + ( ( 1 ) / ( 2 ) ) * w2 * conj ( w1 ) + ( ( i ) / ( 4 ) ) * w1 * conj ( w1 ) - ( ( i ) / ( 8 ) ) * ( conj ( w1 ) ) ^ 2',
    'g61c_chi3':
        '( ( 1 ) / ( 16 ) ) * f1x * conj ( f2a ) + ( ( 1 ) / ( 16 ) ) * f2x * ( - conj ( f1a ) - 2 * f1a + 4 * gamma * conj ( f2a ) + 2 * gamma * f2a )',
    'g61c_phi3':
        'w3 + ( 1 / 32 ) * ( 4 * conj ( w1 ) * conj ( w2 ) + 12 * conj ( w1 ) * w2 + 2 * gamma * ( conj ( w2 ) ) ^ 2 - 4 * conj ( w2 ) * w1 + 12 * w1 * w2 )',
    'g63_chi2':
        '- ( ( f1a - conj ( f1a ) ) / ( 4 ) ) * f1x',
    'g63_chi3':
        '( ( 1 ) / ( 2 ) ) * ( f2a - conj ( f2a ) + ( ( ( conj ( f1a ) ) ^ 2 - ( f1a ) ^ 2 ) / ( 4 ) ) - ( f1a * conj ( f1a ) ) ) * f1x',
    'g64_chi2':
        '( ( alpha + beta ) / ( 4 * ( alpha ^ 2 + 1 ) * ( beta - i ) ) ) * ( 2 * ( 1 - i * alpha ) * conj ( f1a ) - ( alpha ^ 2 + 1 ) * f1a ) * f1x',
    'g64_chi3':
        '( ( 1 ) / ( 16 * ( alpha + beta ) ^ 2 ) ) * ( - ( alpha + beta ) * ( alpha + i ) ^ 2 * ( beta + i ) * ( conj ( f1a ) ) ^ 2 + ( alpha + beta ) * ( alpha + 2 * beta - i ) * ( alpha - i ) ^ 2 * ( f1a ) ^ 2 + 4 * ( alpha + beta ) * ( alpha + beta + i * ( alpha * beta - 1 ) ) * ( f1a * conj ( f1a ) ) - 8 * ( 1 + alpha ^ 2 ) * ( 1 + beta ^ 2 ) * conj ( f2a ) - 8 * ( 1 + alpha ^ 2 ) * ( alpha - i ) * ( beta - i ) * f2a ) * f1x + ( ( 1 ) / ( 16 ) ) * ( 2 * ( alpha ^ 2 - 1 - 2 * i * alpha ) * f1a + ( alpha ^ 2 + 3 + 2 * i * alpha ) * conj ( f1a ) ) * ( f1x ) ^ 2 + ( ( ( alpha ^ 2 + 1 ) * ( beta - i ) ) / ( 2 * ( alpha + beta ) ) ) * conj ( f1a ) * f2x',
    'g64_phi2':
        'w2 - ( ( A ) / ( 4 ) ) * ( ( ( alpha + i ) / ( 2 ) ) * ( conj ( w1 ) ) ^ 2 + ( alpha - i ) * ( w1 * conj ( w1 ) ) )',
    'g64_phi3':
        'w3 - ( ( 1 ) / ( 16 ) ) * ( alpha - i ) ^ 2 * ( w1 ) ^ 2 * conj ( w1 ) - ( ( alpha ^ 2 + 1 ) / ( 16 ) ) * ( 1 + A * ( ( ( beta - i ) * ( alpha - i ) ) / ( alpha + beta ) ) ) * w1 * ( conj ( w1 ) ) ^ 2 - ( ( alpha + i ) / ( 48 ) ) * ( alpha + i + 2 * A * ( ( ( beta - i ) * ( alpha ^ 2 + 1 ) ) / ( alpha + beta ) ) ) * ( conj ( w1 ) ) ^ 3 + ( ( ( alpha ^ 2 + 1 ) * ( beta - i ) ) / ( 2 * ( alpha + beta ) ) ) * conj ( w1 ) * w2',
    'g65_C':
        '( conj ( f1a ) * ( i * j65 * j43 - i * j55 - i * j43 + 1 ) ) / ( 2 * j43 ) + ( f1a * ( - j65 ^ 2 * j55 * j43 ^ 2 - i * j65 ^ 2 * j43 ^ 2 + 2 * j65 * j55 ^ 2 * j43 + j65 * j55 * j43 ^ 2 + 2 * i * j65 * j55 * j43 + i * j65 * j43 ^ 2 - j55 ^ 3 - j55 ^ 2 * j43 - i * j55 ^ 2 - j55 - j43 - i ) ) / ( 4 * j65 * j43 ^ 2 )',
    'g65_D1':
        '( conj ( f1a ) * ( - i * j65 ^ 2 * j55 ^ 2 * j43 ^ 2 + 2 * j65 ^ 2 * j55 * j43 ^ 2 + i * j65 ^ 2 * j43 ^ 2 + 2 * i * j65 * j55 ^ 3 * j43 + i * j65 * j55 ^ 2 * j43 ^ 2 - 2 * j65 * j55 ^ 2 * j43 - 2 * j65 * j55 * j43 ^ 2 + 2 * i * j65 * j55 * j43 + 3 * i * j65 * j43 ^ 2 - 2 * j65 * j43 - i * j55 ^ 4 - i * j55 ^ 3 * j43 - j55 ^ 2 * j43 - 2 * i * j55 ^ 2 - i * j55 * j43 - j43 - i ) ) / ( 16 * j65 ^ 2 * j43 ^ 2 ) + ( f1a * ( i * j65 ^ 2 * j55 ^ 2 * j43 ^ 2 - 2 * j65 ^ 2 * j55 * j43 ^ 2 - i * j65 ^ 2 * j43 ^ 2 - 2 * i * j65 * j55 ^ 3 * j43 - 2 * i * j65 * j55 ^ 2 * j43 ^ 2 + 2 * j65 * j55 ^ 2 * j43 - 2 * i * j65 * j55 * j43 - 2 * i * j65 * j43 ^ 2 + 2 * j65 * j43 + i * j55 ^ 4 + 2 * i * j55 ^ 3 * j43 + 2 * j55 ^ 2 * j43 + 2 * i * j55 ^ 2 + 2 * i * j55 * j43 + 2 * j43 + i ) ) / ( 16 * j65 ^ 2 * j43 ^ 2 )',
    'g65_D2':
        '( conj ( f1a ) ^ 2 * ( - i * j65 ^ 2 * j55 * j43 ^ 2 - j65 ^ 2 * j43 ^ 2 + 2 * i * j65 * j55 ^ 2 * j43 + i * j65 * j55 * j43 ^ 2 + 4 * j65 * j55 * j43 + j65 * j43 ^ 2 - 2 * i * j65 * j43 - i * j55 ^ 3 - i * j55 ^ 2 * j43 - 3 * j55 ^ 2 - 2 * j55 * j43 - i * j55 + i * j43 - 3 ) ) / ( 16 * j65 * j43 ) + ( conj ( f1a ) * f1a * ( j65 * j43 - j55 - j43 + i ) ) / 4 + ( - i * conj ( f2a ) * j43 ) / 2 + ( f1a ^ 2 * ( i * j65 ^ 3 * j55 * j43 ^ 2 - j65 ^ 3 * j43 ^ 2 - 2 * i * j65 ^ 2 * j55 ^ 2 * j43 - i * j65 ^ 2 * j55 * j43 ^ 2 + j65 ^ 2 * j43 ^ 2 - 2 * i * j65 ^ 2 * j43 + i * j65 * j55 ^ 3 + j65 * j55 ^ 2 + i * j65 * j55 + j65 + i * j55 ^ 3 + j55 ^ 2 + i * j55 + 1 ) ) / ( 16 * j65 ^ 2 * j43 ) + ( f2a * ( i * j65 * j43 - i * j55 - 1 ) ) / ( 2 * j65 )',
    'g65_D3':
        '( conj ( f1a ) * ( - i * j55 - 1 ) ) / ( 2 * j65 )',
    'g65_phi2':
        'w2 + ( ( 1 + ( i * A ) ) / ( 4 * i * j43 ) ) * ( j55 + j43 - j65 * j43 + i ) * ( w1 * conj ( w1 ) - ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) )',
    'g65_phi3':
        'w3 + ( ( 1 ) / ( 48 * j65 ^ 2 * j43 ^ 2 ) ) * conj ( w1 ) ^ 3 * ( - 2 * i * j65 ^ 2 * j55 ^ 2 * j43 ^ 2 - 4 * j65 ^ 2 * j55 * j43 ^ 2 + 2 * i * j65 ^ 2 * j43 ^ 2 + 4 * i * j65 * j55 ^ 3 * j43 + i * j65 * j55 ^ 2 * j43 ^ 2 + 4 * j65 * j55 ^ 2 * j43 + 2 * j65 * j55 * j43 ^ 2 + 4 * i * j65 * j55 * j43 - i * j65 * j43 ^ 2 + 4 * j65 * j43 - 2 * i * j55 ^ 4 - i * j55 ^ 3 * j43 - j55 ^ 2 * j43 - 4 * i * j55 ^ 2 - i * j55 * j43 - j43 - 2 * i ) + ( ( 1 ) / ( 16 * j65 ^ 2 * j43 ^ 2 ) ) * conj ( w1 ) ^ 2 * w1 * ( i * j65 ^ 2 * j55 ^ 2 * j43 ^ 2 + 2 * j65 ^ 2 * j55 * j43 ^ 2 - i * j65 ^ 2 * j43 ^ 2 - 2 * i * j65 * j55 ^ 3 * j43 - 2 * j65 * j55 ^ 2 * j43 - 2 * i * j65 * j55 * j43 - 2 * j65 * j43 + i * j55 ^ 4 + 2 * i * j55 ^ 2 + i ) + ( ( 1 ) / ( 16 * j65 ^ 2 * j43 ) ) * conj ( w1 ) * w1 ^ 2 * ( - i * j65 * j55 ^ 2 * j43 - 2 * j65 * j55 * j43 + i * j65 * j43 + i * j55 ^ 3 + j55 ^ 2 + i * j55 + 1 ) - ( ( i * j55 + 1 ) / ( 2 * j65 ) ) * conj ( w1 ) * w2',
    'g66_chi3':
        '( ( 1 ) / ( 16 ) ) * ( f1x ) ^ 2 * ( 3 * conj ( f1a ) - 2 * f1a ) + ( ( 1 ) / ( 16 ) ) * f1x * ( 2 * ( conj ( f1a ) ) ^ 2 - ( f1a ) ^ 2 + 8 * f2a ) + ( ( 1 ) / ( 2 ) ) * f2x * conj ( f1a )',
    'g66_phi2':
        'w2 + ( ( 1 ) / ( 4 ) ) * ( w1 * conj ( w1 ) - ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) )',
    'g66_phi3':
        'w3 + ( ( 1 ) / ( 48 ) ) * ( - ( conj ( w1 ) ) ^ 3 + 3 * conj ( w1 ) * ( w1 ) ^ 2 + 24 * conj ( w1 ) * w2 )',
    'g67_chi3':
        'f1x * ( - ( ( 1 ) / ( 2 ) ) * f2a + ( ( alpha ) / ( 2 * ( 1 - alpha ) ) ) * conj ( f2a ) + ( ( alpha * ( 2 + alpha ) ) / ( 16 * ( 1 - alpha ) ) ) * ( conj ( f1a ) ) ^ 2 + ( ( alpha ^ 2 ) / ( 16 * ( 1 - alpha ) ) ) * ( f1a ) ^ 2 - ( ( alpha ^ 2 ) / ( 4 * ( 1 - alpha ) ) ) * ( f1a * conj ( f1a ) ) ) + ( ( alpha ) / ( 16 * ( 1 - alpha ) ) ) * ( f1a - conj ( f1a ) ) * ( f1x ) ^ 2 + ( ( 1 ) / ( 2 * ( 1 - alpha ) ) ) * conj ( f1a ) * f2x',
    'g67_phi2':
        'w2 + alpha * ( - ( ( ( conj ( w1 ) ) ^ 2 ) / ( 8 ) ) + ( ( ( w1 * conj ( w1 ) ) ) / ( 4 ) ) )',
    'g67_phi3':
        'w3 + ( ( alpha ) / ( 8 * ( 1 - alpha ) ) ) * ( conj ( w1 ) ) ^ 2 * ( ( ( w1 ) / ( 2 ) ) - ( ( conj ( w1 ) ) / ( 3 ) ) ) + ( ( conj ( w1 ) * w2 ) / ( 2 * ( 1 - alpha ) ) )',
    'g68_chi2':
        '( ( j33 - i ) / ( 4 * j43 ^ 2 ) ) * f1x * ( 2 * i * j43 * conj ( f1a ) + ( j33 - i * j43 ) * f1a )',
    'g68_chi3':
        '( ( i ) / ( 2 ) ) * f2x * conj ( f1a ) + ( ( 1 ) / ( 16 * j43 ^ 2 ) ) * ( f1x ) ^ 2 * ( 4 * i * j43 ^ 2 - ( j33 - i ) * ( 3 * j43 + i * j33 ) ) * ( conj ( f1a ) - f1a ) + f1x * ( ( ( 1 ) / ( 16 * j43 ) ) * ( conj ( f1a ) ) ^ 2 * ( - j33 * ( j43 - i * j33 ) - i * j43 - 3 * j33 + 2 * i ) + ( ( 1 ) / ( 16 * j43 ) ) * ( f1a ) ^ 2 * ( - j33 * ( j43 + i * j33 ) - 3 * i * j43 + j33 - 2 * i ) + ( ( j33 + i ) / 4 ) * conj ( f1a ) * f1a - ( ( i * j43 ) / ( 2 ) ) * conj ( f2a ) + ( ( i * ( j43 + 1 ) ) / ( 2 ) ) * f2a )',
    'g68_phi2':
        'w2 + ( ( ( i * A ) ) / ( 4 ) ) * ( w1 * conj ( w1 ) - ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) )',
    'g68_phi3':
        'w3 + ( ( i ) / ( 2 ) ) * conj ( w1 ) * w2 - ( ( B ) / ( 48 ) ) * ( w1 - conj ( w1 ) ) ^ 3 - ( ( A ) / ( 16 ) ) * w1 * ( conj ( w1 ) ) ^ 2 + ( ( A ) / ( 24 ) ) * ( conj ( w1 ) ) ^ 3',
    'm10a_D1':
        'i * conj ( f1a ) * ( 7 * j43 ^ 2 * j21 ^ 2 - 3 * j43 ^ 2 + 7 * i * j43 * j33 * j21 ^ 3 - 7 * i * j43 * j33 * j21 - 7 * j43 * j21 ^ 3 - j43 * j21 + 4 * j33 ^ 2 * j21 ^ 2 + 4 * j21 ^ 2 ) + i * f1a * ( - 4 * j43 ^ 2 * j21 ^ 2 + j43 ^ 2 - 4 * i * j43 * j33 * j21 ^ 3 + 4 * i * j43 * j33 * j21 + 4 * j43 * j21 ^ 3 + 2 * j43 * j21 - 3 * j33 ^ 2 * j21 ^ 2 - 3 * j21 ^ 2 )',
    'm10a_D2':
        '- i * ( conj ( f1a ) ) ^ 2 * ( j43 ^ 2 * j21 - 2 * j43 * j21 ^ 2 + 2 * j43 + j33 ^ 2 * j21 - 2 * i * j33 * j21 - j21 ) + 4 * i * conj ( f1a ) * f1a * ( j43 ^ 2 * j21 + j43 * j21 ^ 2 - j43 + j33 ^ 2 * j21 - 2 * i * j33 * j21 - j21 ) - 8 * conj ( f2a ) * ( j43 ^ 2 + j33 ^ 2 - 2 * i * j33 - 1 ) + 8 * f2a * ( j43 ^ 2 + j33 ^ 2 - 2 * j43 * j21 + 1 ) - i * f1a ^ 2 * ( j43 ^ 2 * j21 + 3 * j43 * j21 ^ 2 - 2 * j43 + j33 ^ 2 * j21 - 3 * i * j33 * j21 - 2 * j21 )',
    'm10a_chi2':
        '- ( ( ( i * j21 ) / ( 4 ) ) * ( 2 * conj ( f1a ) - f1a ) * f1x )',
    'm10a_chi3':
        '( ( j21 ) / ( 16 * ( ( j43 - j21 ) ^ 2 + j33 ^ 2 * j21 ^ 2 ) ) ) * D1 * ( f1x ) ^ 2 + ( ( 1 ) / ( 16 * ( j43 - i * j33 * j21 - j21 ) ) ) * ( D2 * j21 * f1x + 8 * j43 * ( 1 - j21 ^ 2 ) * ( conj ( f1a ) + f1a ) * f2x )',
    'm10a_phi2':
        'w2 - ( ( i * j21 ) / ( 4 ) ) * ( w1 * conj ( w1 ) - ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) )',
    'm10a_phi3':
        'w3 + ( ( 1 ) / ( 48 * b ) ) * ( ( conj ( w1 ) ) ^ 3 * j21 * ( c + ( i * b ) ) + 3 * ( conj ( w1 ) ) ^ 2 * w1 * j21 ^ 2 * ( i - r ) + 12 * conj ( w1 ) * conj ( w2 ) * ( ( i * c ) + i * j21 * r + j21 + b ) + 3 * conj ( w1 ) * w1 ^ 2 * j21 * ( - c + 2 * j21 * r - 2 * i * j21 - ( i * b ) ) + 12 * ( conj ( w1 ) + w1 ) * w2 * ( - ( i * c ) + i * j21 * r + j21 + b ) )',
    'm10b_D1':
        '- i * conj ( f1a ) * ( 3 * j65 * j21 + 7 ) + i * f1a * ( j65 * j21 + 4 )',
    'm10b_D2':
        '- i * ( conj ( f1a ) ) ^ 2 * ( 3 * j65 * j21 + 1 ) - 8 * i * conj ( f1a ) * f1a - 8 * conj ( f2a ) * ( j65 - j21 ) + 8 * f2a * ( j65 + j21 ) + i * f1a ^ 2 * ( j65 * j21 + 4 )',
    'm10b_chi3':
        '( ( 1 ) / ( 16 * j65 ) ) * ( D1 * ( f1x ) ^ 2 + D2 * f1x ) + ( ( j65 + j21 ) / ( 2 * j65 ) ) * ( conj ( f1a ) + f1a ) * f2x',
    'm10c_D1':
        '- 4 * i * conj ( f1a ) + 3 * i * f1a',
    'm10c_D2':
        '( 2 * i - j33 ) * ( conj ( f1a ) ) ^ 2 + 4 * ( j33 - 2 * i ) * conj ( f1a ) * f1a - 8 * ( i * j33 + 2 ) * conj ( f2a ) + 8 * i * j33 * f2a + ( 3 * i - j33 ) * f1a ^ 2',
    'm10c_chi3':
        '( ( 1 ) / ( 16 ) ) * ( D1 * ( f1x ) ^ 2 + D2 * f1x )',
    'm14_chi2':
        '( ( 1 ) / ( 8 ) ) * f1x * ( 2 * i * j36 * conj ( f1a ) * ( conj ( f2a ) + f2a ) + 4 * j36 * conj ( f3a ) - i * ( conj ( f1a ) ) ^ 2 * f3a - i * conj ( f1a ) * conj ( f3a ) * f1a ) + ( ( j36 ) / ( 2 ) ) * conj ( f1a ) * f3x',
    'm14_chi3':
        '( ( i ) / ( 4 ) ) * f1x * ( - j36 * ( conj ( f1a ) * f3a + f1a * conj ( f3a ) ) + 2 * ( f2a + conj ( f2a ) ) )',
    'm18_D2':
        '16 * j36 * ( - ( conj ( f1a ) ) ^ 3 + 8 * i * conj ( f1a ) * conj ( f2a ) + 2 * conj ( f1a ) * ( f1a ) ^ 2 + 8 * i * conj ( f1a ) * f2a + 16 * conj ( f3a ) - ( f1a ) ^ 3 ) + i * ( ( conj ( f1a ) ) ^ 5 - 4 * ( conj ( f1a ) ) ^ 4 * f1a + 8 * ( conj ( f1a ) ) ^ 3 * ( f1a ) ^ 2 - 4 * ( conj ( f1a ) ) ^ 2 * ( f1a ) ^ 3 - 64 * ( conj ( f1a ) ) ^ 2 * f3a - 64 * conj ( f1a ) * conj ( f3a ) * f1a + conj ( f1a ) * ( f1a ) ^ 4 - 256 * ( conj ( f1a ) - f1a ) )',
    'm18_D3':
        'i * j36 * ( ( conj ( f1a ) ) ^ 4 - 4 * ( conj ( f1a ) ) ^ 3 * f1a + 8 * ( conj ( f1a ) ) ^ 2 * ( f1a ) ^ 2 - 4 * conj ( f1a ) * ( f1a ) ^ 3 - 64 * conj ( f1a ) * f3a - 64 * conj ( f3a ) * f1a + ( f1a ) ^ 4 ) - 32 * ( conj ( f1a ) ) ^ 2 - 16 * ( f1a ) ^ 2 + 64 * conj ( f1a ) * f1a + 128 * i * ( conj ( f2a ) + f2a )',
    'm18_chi2':
        '( ( j36 ) / ( 32 ) ) * ( f1x ) ^ 3 * ( conj ( f1a ) - f1a ) + ( ( j36 ) / ( 64 ) ) * ( f1x ) ^ 2 * ( 4 * ( conj ( f1a ) ) ^ 2 - 3 * ( f1a ) ^ 2 ) + ( ( 1 ) / ( 512 ) ) * D2 * f1x + ( ( j36 ) / ( 2 ) ) * f3x * conj ( f1a )',
    'm18_chi3':
        '( ( 1 ) / ( 16 ) ) * ( f1x ) ^ 2 * ( 4 * conj ( f1a ) - 3 * f1a ) + ( ( 1 ) / ( 256 ) ) * D3 * f1x',
    'm18_phi2':
        'w2 + ( ( j36 ) / ( 2 ) ) * w3 * conj ( w1 ) + ( ( 1 ) / ( 8 ) ) * ( w1 - conj ( w1 ) ) ^ 2 * ( i - ( ( j36 ) / ( 48 ) ) * ( w1 - conj ( w1 ) ) ^ 2 ) + ( ( j36 ) / ( 384 ) ) * ( conj ( w1 ) ) ^ 2 * ( 6 * w1 ^ 2 - 8 * w1 * conj ( w1 ) + 3 * ( conj ( w1 ) ) ^ 2 )',
    'm18_phi3':
        'w3 + ( ( 1 ) / ( 48 ) ) * conj ( w1 ) * ( 3 * w1 ^ 2 - 3 * w1 * conj ( w1 ) + ( conj ( w1 ) ) ^ 2 )',
    'm5_C1':
        'b * ( 1 + i * j55 ) * conj ( f1a ) + ( b - 1 + ( i * a ) ) * j65 * conj ( f2a ) + ( ( b * ( a + i ) * j65 ) / ( b * j13 - d * ( a - i ) ) ) * f1a + ( ( j55 - i ) * ( b * j13 - d * a - ( i * d ) ) - b * j65 ) * f2a',
    'm5_C2':
        '( 1 - b + ( i * a ) ) * conj ( f1a ) + ( ( ( 4 * ( 1 + i * j55 ) ) / ( j65 ) ) + ( a + i * ( b + 1 ) ) * j13 - ( ( d ) / ( b ) ) * ( 1 + a ^ 2 ) - d * ( 1 + ( i * a ) ) ) * conj ( f2a ) + ( 1 - a * i ) * f1a + ( - ( ( 2 * ( 1 + i * j55 ) ) / ( j65 ) ) + ( a + i * ( b - 1 ) ) * j13 - ( ( d ) / ( b ) ) * ( 1 + a ^ 2 ) + d * ( 1 - ( i * a ) ) ) * f2a',
    'm5_LAM':
        '( ( ( 1 + i * j55 ) * ( 1 - ( i * a ) ) ) / ( 4 * j65 ) ) * ( ( i * b ) * j13 + ( 1 - ( i * a ) ) * d ) + ( ( 1 - ( i * a ) ) / ( 2 ) ) * ( 1 - ( ( d * ( 1 + i * j55 ) ) / ( j65 ) ) )',
    'm5_M':
        '( ( 1 ) / ( 4 ) ) * ( ( i * b ) * j13 + ( 1 - ( i * a ) ) * d ) + ( ( 1 ) / ( 2 ) ) * ( ( ( 1 ) / ( j65 ) ) - d + i * ( ( j55 ) / ( j65 ) ) )',
    'm5_delta_1111':
        '( - ( ( 3 - i ) / ( 4 ) ) * conj ( f2a ) - ( ( 5 + 5 * i ) / ( 8 ) ) * conj ( f1a ) + ( ( 3 + 4 * i ) / ( 8 ) ) * f2a + ( ( 7 + i ) / ( 16 ) ) * f1a ) * f1x + ( ( ( 3 + i ) / ( 4 ) ) * conj ( f2a ) + ( ( 3 + i ) / ( 4 ) ) * conj ( f1a ) - ( ( 1 + 3 * i ) / ( 4 ) ) * f2a + ( ( 1 - 2 * i ) / ( 8 ) ) * f1a ) * f2x',
    'm5_phi1':
        '2 * w1 - ( ( i * ( j13 - ( ( a * d ) / ( b ) ) ) - ( ( d ) / ( b ) ) ) * conj ( w2 ) )',
    'm5_phi3_core':
        'w3 + ( b / 4 ) * ( - w2 * conj ( w1 ) + conj ( w2 ) * conj ( w1 ) + ( ( 1 + i * j55 ) / ( j65 ) ) * ( ( 1 - ( i * a ) ) * w1 * conj ( w1 ) + ( 1 + ( i * a ) ) * ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) ) )',
    'm5_psi_ab':
        '- ( LAM / 2 ) * w1 * conj ( w2 ) + ( M / 2 ) * ( w2 * conj ( w2 ) - conj ( w2 ) ^ 2 / 2 )',
    'm5_psi_nonab':
        '- ( LAM / ( i * ( j13 - a * d / b ) - d / b ) ) * ( w1 ^ 2 / 2 ) + ( M / 2 ) * ( w2 * conj ( w2 ) - conj ( w2 ) ^ 2 / 2 )',
    'm5ab_delta':
        '- ( ( ( 1 ) / ( 4 ) ) * conj ( f2a ) + ( ( 1 ) / ( 8 * beta ) ) * conj ( f1a ) - ( ( 1 ) / ( 8 ) ) * f2a + ( ( 1 ) / ( 16 * beta ) ) * f1a ) * f1x + ( ( ( 1 ) / ( 2 * beta ) ) * conj ( f2a ) + ( ( 1 ) / ( 4 ) ) * conj ( f1a ) - ( ( 1 ) / ( 4 * beta ) ) * f2a + ( ( 1 ) / ( 8 ) ) * f1a ) * f2x',
    'm5ab_phi3_core':
        'w3 - ( 1 / 4 ) * ( - w2 * conj ( w1 ) + conj ( w2 ) * conj ( w1 ) + ( ( 1 ) / ( beta ) ) * ( w1 * conj ( w1 ) + ( ( ( conj ( w1 ) ) ^ 2 ) / ( 2 ) ) ) )',
}
