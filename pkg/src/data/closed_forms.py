"""
Closed forms of the subgraph counts of an srg(n, k, 1, 2), as printed in the
summary lists, written as expressions in n, k and the free parameter n3.

P_FORMS   triangles, quadrilaterals, pentagons
L_FORMS   the nine feasible classes of order four
M_FORMS   the twenty-one feasible classes of order five
N_FORMS   the sixty-two feasible classes of order six
ORDER3_FORMS  the four classes of order three, catalog order (empty, K2+K1, P3, K3)
"""

P_FORMS = {
    3: "n*k/6",
    4: "n*k*(k-2)/8",
    5: "n*k*(k-2)*(k-4)/5",
}

ORDER3_FORMS = {
    0: "n*(n-1)*(n-2)/6 - n*k*(n-2*k+1)/2 - n*k*(k-2)/2 - n*k/6",
    1: "n*k*(n-2*k+1)/2",
    2: "n*k*(k-2)/2",
    3: "n*k/6",
}

L_FORMS = {
    1: "n*k*(k-2)*(k-4)*(k**3-6*k**2+10*k-12)/192",
    2: "n*k*(k-2)*(k-4)*(k**2-4*k+6)/16",
    3: "n*k*(k-2)*(k**2-6*k+10)/16",
    4: "n*k*(k-2)*(n-3*k+4)/2",
    5: "n*k*(k-2)*(k-3)/2",
    6: "n*k*(k-2)*(k-4)/6",
    7: "n*k*(k-2)*(k-4)/12",
    8: "n*k*(k-2)/8",
    9: "n*k*(k-2)/2",
}

M_FORMS = {
    1: "n*k*(k-2)*(k-4)*(n-4*k+6)*(k**3-6*k**2+14*k-36)/960",
    2: "n*k*(k-2)*(k-4)**2*(k**3-8*k**2+26*k-48)/96",
    3: "n*k*(k-2)*(k-4)*(k**3-10*k**2+38*k-60)/16",
    4: "n*k*(k-2)*(k-4)*(k**3-10*k**2+40*k-68)/32",
    5: "n*k*(k-2)*(k-4)*(n-4*k+8)/6",
    6: "n*k*(k-2)*(k-4)*(k**2-8*k+20)/8",
    7: "n*k*(k-2)*(k-4)*(k**2-7*k+16)/4",
    8: "n*k*(k-2)*(k-4)*(n-4*k+8)/24",
    9: "n*k*(k-2)*(k-4)*(k-6)/24",
    10: "n*k*(k-2)*(n-4*k+8)/8",
    11: "n*k*(k-2)*(k-4)**2/2",
    12: "n*k*(k-2)*(k-4)**2/4",
    13: "n*k*(k-2)*(k**2-8*k+17)/2",
    14: "n*k*(k-2)*(k-4)*(k-6)/24",
    15: "n*k*(k-2)*(k-4)/2",
    16: "n*k*(k-2)*(k-3)/2",
    17: "n*k*(k-2)*(k-4)/4",
    18: "n*k*(k-2)*(k-4)/5",
    19: "n*k*(k-2)/8",
    20: "n*k*(k-2)/2",
    21: "n*k*(k-2)*(k-4)/2",
}

N_FORMS = {
    1: "n*k*(k-2)/12 - n3/3",
    2: "n*k*(k-2)/2",
    3: "n3",
    4: "2*n3",
    5: "n*k*(k-2)*(k-4)/8 - n3",
    6: "n*k*(k-2)*(k-3)/2 - 2*n3",
    7: "n*k*(k-2)*(k-4)/4",
    8: "n*k*(k-2)*(k-4) - 2*n3",
    9: "n*k*(k-2)*(k-4)/4 - n3",
    10: "n*k*(k-2)*(k-4)/2 - 2*n3",
    11: "n*k*(k-2)*(k-4)*(k-6)/2 + 4*n3",
    12: "n*k*(k-2)*(2*k**2-21*k+53)/12 + n3",
    13: "n*k*(k-2)*(k-4)*(k**2-12*k+42)/32 - n3",
    14: "n*k*(k-2)*(k-4)*(k-12)/144 + n3/3",
    15: "n*k*(k-2)*(k-4)/8",
    16: "n*k*(k-2)*(k-4)/2",
    17: "n*k*(k-2)*(k-4)",
    18: "n*k*(k-2)*(k-4) - 4*n3",
    19: "n*k*(k-2)*(k-4)*(k-6)/12",
    20: "n*k*(k-2)*(k-4)**2/2",
    21: "n*k*(k-2)*(k-3)*(k-4)/6 + 2*n3/3",
    22: "n*k*(k-2)*(k-4)*(k-5)/2",
    23: "n*k*(k-2)*(k-4)*(k-5) + 4*n3",
    24: "n*k*(k-2)*(k-4)*(k-6)/4 + 2*n3",
    25: "n*k*(k-2)*(k-4)*(k-7)/2 + 4*n3",
    26: "n*k*(k-2)*(k-4)*(k-6)/4",
    27: "n*k*(k-2)*(k-4)*(k-5)/2 + 2*n3",
    28: "n*k*(k-2)*(k-4)*(k-6)/4 + 2*n3",
    29: "n*k*(k-2)*(k-4)*(k-6) + 6*n3",
    30: "n*k*(k-2)*(k-4)*(k-6)*(k-8)/120",
    31: "n*k*(k-2)*(k-4)*(k-5)*(k-6)/6",
    32: "n*k*(k-2)*(k-4)*(k**2-10*k+26)/8 - n3",
    33: "n*k*(k-2)*(k-4)*(k**2-10*k+28)/2 - 6*n3",
    34: "n*k*(k-2)*(k-4)*(k**2-11*k+34)/2 - 8*n3",
    35: "n*k*(k-2)*(k-4)*(k**2-11*k+36)/2 - 10*n3",
    36: "n*k*(k-2)*(k-4)*(k**7-24*k**6+248*k**5-1520*k**4+6436*k**3-19520*k**2+38896*k-40704)/23040 + n3/3",
    37: "n*k*(k-2)*(k-4)*(k**6-22*k**5+212*k**4-1208*k**3+4484*k**2-10456*k+12288)/768 - 3*n3",
    38: "n*k*(k-2)*(k-4)*(k**5-20*k**4+172*k**3-828*k**2+2300*k-3048)/96 + 6*n3",
    39: "n*k*(k-2)*(k-4)*(k**5-20*k**4+176*k**3-884*k**2+2588*k-3624)/128 + 6*n3",
    40: "n*k*(k-2)*(k-4)*(k**4-18*k**3+130*k**2-460*k+696)/48 - 2*n3",
    41: "n*k*(k-2)*(k-4)*(k**4-18*k**3+136*k**2-524*k+892)/16 - 14*n3",
    42: "n*k*(k-2)*(k-4)*(k**4-17*k**3+120*k**2-430*k+684)/16 - 10*n3",
    43: "n*k*(k-2)*(k-4)*(k**4-18*k**3+130*k**2-460*k+720)/288 - 2*n3/3",
    44: "n*k*(k-2)*(k-4)*(k-6)*(n-5*k+13)/24",
    45: "n*k*(k-2)*(k-4)*(k-6)*(k**2-8*k+26)/64 + n3",
    46: "n*k*(k-2)*(k-4)*(k**3-14*k**2+72*k-140)/4 + 8*n3",
    47: "n*k*(k-2)*(k-4)*(k-6)*(k**2-8*k+22)/16 + 2*n3",
    48: "n*k*(k-2)*(k-4)*(k**3-14*k**2+75*k-160)/4 + 14*n3",
    49: "n*k*(k-2)*(k-4)*(k**3-16*k**2+94*k-216)/48 + 2*n3",
    50: "n*k*(k-2)*(k-4)*(k**2-10*k+30)/4 - 4*n3",
    51: "n*k*(k-2)*(k-4)*(k**2-9*k+22)/4 - 2*n3",
    52: "n*k*(k-2)*(k-4)*(n-5*k+12)/4",
    53: "n*k*(k-2)*(k-4)*(n-5*k+15)/5 - 2*n3",
    54: "n*k*(k-2)*(k-4)*(k-6)/16",
    55: "n*k*(k-2)*(k-4)*(k-6)/4 + 2*n3",
    56: "n*k*(k-2)*(k-4)*(k**2-10*k+30)/4 - 4*n3",
    57: "n*k*(k-2)*(k-4)*(k**4-18*k**3+140*k**2-564*k+996)/192 - 4*n3/3",
    58: "n*k*(k-2)*(k-4)*(k**3-15*k**2+86*k-190)/8 + 8*n3",
    59: "n*k*(k-2)*(k-4)*(k-6)*(k**2-10*k+34)/24 + 2*n3",
    60: "n*k*(k-2)*(k-4)*(k**2-12*k+38)/8 - 2*n3",
    61: "n*k*(k-2)*(k-4)*(k**3-16*k**2+96*k-220)/16 + 5*n3",
    62: "n*k*(k-2)*(k-4)*(k**2-14*k+54)/24 - 2*n3",
}
