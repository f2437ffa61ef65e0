"""
Counting relations between the subgraph numbers of an srg(n, k, 1, 2).

Each row holds one relation "lhs = rhs" in sympy syntax over the symbols
p3..p5, l1..l9, m1..m21, n1..n62, n3, n, k and

    E  edge count, nk/2
    W  vertices at distance two from all three vertices of a triangle, n - 3 - 3(k-2)
    C(x, r)  binomial coefficient, polynomial in x

"printed" keeps the relation as it is typeset; "alternatives" holds other
readings of the same line (label -> (lhs, rhs)) and "note" says why.
"""


def _row(name, lhs, rhs, printed, group="construction", alternatives=None, note=None):
    return {
        "name": name,
        "group": group,
        "lhs": lhs,
        "rhs": rhs,
        "printed": printed,
        "alternatives": alternatives or {},
        "note": note,
    }


CONSTRUCTION_ROWS = [
    _row("n1", "2*p4", "3*n1 + n3", r"2p_4=3n_1+n_3"),
    _row("n2", "4*p4", "n2", r"n_2=4p_4"),
    _row("n4", "3*(k-2)*p3", "6*n1 + n4", r"3(k-2)p_3=6n_1+n_4"),
    _row("n5", "E*(k/2-1)**2", "n5 + 2*n3 + 3*n1", r"|E(G)|(\frac{k}{2}-1)^2=n_5+2n_3+3n_1"),
    _row("n6", "4*(k-2)*p4", "n6 + 2*n4 + 6*n1", r"4(k-2)p_4=n_6+2n_4+6n_1"),
    _row("n7", "4*p4*(k/2-2)", "n7", r"4p_4(\frac{k}{2}-2)=n_7"),
    _row("n8", "5*p5", "n8 + n4", r"5p_5=n_8+n_4"),
    _row("n9", "E*C(k-2, 2)", "n9 + n4 + 3*n1", r"|E(G)|{k-2\choose 2} =n_9+n_4+3n_1"),
    _row("n10", "5*p5", "2*n10 + 2*n4", r"5p_5=2n_{10}+2n_4"),
    _row("n11", "n*k*(k-2)*(k-4)/6*3*(k-4)", "n11 + 2*n10",
         r"n\frac{k(k-2)(k-4)}{6}3(k-4)=n_{11}+2n_{10}"),
    _row("m13-paths", "n*k*(k-2)/2*(k-3)**2", "m13 + 5*p5",
         r"n\frac{k(k-2)}{2}(k-3)^2=m_{13}+5p_5", group="definition"),
    _row("n12", "2*m13", "6*n12 + 2*n9 + n8 + n2", r"2m_{13}=6n_{12}+2n_9+n_8+n_2",
         alternatives={"repaired": ("2*m13", "6*n12 + 2*n9 + 2*n8 + n2")},
         note="n_8 reads 2n8: either common neighbour of the leaves closes the path"),
    _row("n13", "p4*(E - 12 - 4*(k-4))", "n13 + n11 + n10 + 2*n9 + n7 + n6 + 2*n4 + 3*n1",
         r"p_4(|E(G)|-12-4(k-4))=n_{13}+n_{11}+n_{10}+2n_9+n_7+n_6+2n_4+3n_1"),
    _row("n14", "p3*(p3-1)/2 - n*(k/2)*(k/2-1)/2", "n1 + n3 + n5 + n14",
         r"\frac{1}{2}p_3(p_3-1)-\frac{1}{2}n\cdot\frac{k}{2}(\frac{k}{2}-1)=n_1+n_3+n_5+n_{14}"),
    _row("n15", "n*C(k/2, 2)*(k-4)", "n15", r"n_{15}=n{k/2 \choose 2}(k-4)"),
    _row("n16", "n*C(k/2, 2)*4*(k-4)", "n16", r"n_{16}=n{k/2 \choose 2}4(k-4)"),
    _row("n17", "p4*4*2*(k-4)", "n17", r"n_{17}=p_4\cdot4\cdot2(k-4)"),
    _row("n18", "p4*4*2*(k-4)", "n18 + 2*n4", r"p_4\cdot 4 \cdot2(k-4)=n_{18}+2n_4"),
    _row("n19", "n*(k/2)*(k-2)*(k-4)*(k-6)/6", "n19",
         r"n_{19}=n\cdot\frac{k}{2}\cdot \frac{(k-2)(k-4)(k-6)}{6}"),
    _row("n20", "n*(k/2)*(k-2)*(k-4)/2*2*(k-4)", "n20",
         r"n_{20}=n\cdot\frac{k}{2}\cdot \frac{(k-2)(k-4)}{2}\cdot 2(k-4)"),
    _row("n21", "p3*(k-3)**3", "n21 + n6 + n4 + 2*n1", r"p_3 (k-3)^3=n_{21}+n_6+n_4+2n_1",
         alternatives={"repaired": ("p3*(k-2)**3", "n21 + n6 + n4 + 2*n1")},
         note="each triangle vertex has k-2 further neighbors, so the cube reads (k-2)^3"),
    _row("n22", "n*(k/2)*(k-2)*(k-4)/2*2*(k-5)", "n22",
         r"n_{22}=n\cdot\frac{k}{2}\cdot \frac{(k-2)(k-4)}{2}\cdot 2(k-5)"),
    _row("n23", "p3*3*(k-2)*(k-3)*2*(k-4)", "n23 + 2*n8",
         r"p_3\cdot3(k-2)(k-3)\cdot2(k-4)=n_{23}+2n_8"),
    _row("n24", "E*2*(k/2-1)*(k-2)*(k-4)/2", "n24 + n18 + n4",
         r"|E(G)|\cdot2(\frac{k}{2}-1)\frac{(k-2)(k-4)}{2}=n_{24}+n_{18}+n_4"),
    _row("n25", "n*(k/2)*(k-2)*(k-4)*(k-3)", "n25 + 2*n8",
         r"n\cdot \frac{k}{2}(k-2)(k-4)(k-3)=n_{25}+2n_8"),
    _row("n26", "p4*4*(k-4)*(k-6)/2", "n26", r"n_{26}=p_4 \cdot 4 \cdot \frac{(k-4)(k-6)}{2}"),
    _row("n27", "p4*4*(k-4)**2", "n27 + 2*n9", r"p_4\cdot 4(k-4)^2=n_{27}+2n_9"),
    _row("n28", "p4*2*(k-4)**2", "n28 + n10", r"p_4\cdot 2(k-4)^2=n_{28}+n_{10}"),
    _row("n29", "p5*5*(k-4)", "n29 + 4*n10 + n4", r"p_5\cdot 5 (k-4)=n_{29}+4n_{10}+n_4"),
    _row("n30", "n*k*(k-2)*(k-4)*(k-6)*(k-8)/120", "n30",
         r"n_{30}=n\cdot \frac{1}{5!}k(k-2)(k-4)(k-6)(k-8)"),
    _row("n31", "n*k*(k-2)*(k-4)*(k-6)/24*4*(k-5)", "n31",
         r"n_{31}=n\cdot \frac{1}{4!}k(k-2)(k-4)(k-6) \cdot 4(k-5)"),
    _row("n32", "E*((k-2)*(k-4)/2)**2", "n32 + n27 + n9",
         r"|E(G)|\cdot (\frac{(k-2)(k-4)}{2})^2=n_{32}+n_{27}+n_9"),
    _row("n33", "n*k*(k-2)*(k-4)/6*3*(k-4)**2", "n33 + n29",
         r"n\cdot \frac{k(k-2)(k-4)}{6}\cdot3(k-4)^2=n_{33}+n_{29}"),
    _row("n34", "n*k*(k-2)*(k-4)/6*3*(k-4)*(k-3)", "n34 + 2*n29 + 2*n10",
         r"n\cdot \frac{k(k-2)(k-4)}{6}\cdot3(k-4)\cdot (k-3)=n_{34}+2n_{29}+2n_{10}"),
    _row("n35", "m13*2*(k-3)", "2*n35 + 2*n29 + 12*n12 + 2*n8",
         r"m_{13}\cdot 2(k-3)=2n_{35}+2n_{29}+12n_{12}+2n_8"),
    _row("n44", "n*k*(k-2)*(k-4)*(k-6)/24*(n-k-1-6-4*(k-5))", "n44",
         r"n_{44}=n\cdot \frac{1}{4!}k(k-2)(k-4)(k-6)\cdot(n-k-1-6-4(k-5))"),
    _row("n45", "p4*C(n-8-4*(k-4), 2)", "n45 + n13", r"p_4\cdot {n-8-4(k-4)\choose 2}=n_{45}+n_{13}"),
    _row("n46", "n*k*(k-2)*(k-4)/6*3*(k-4)*(n-k-4-3*(k-4))", "n46 + n34",
         r"n\cdot \frac{k(k-2)(k-4)}{6}\cdot 3(k-4)\cdot (n-k-4-3(k-4))=n_{46}+n_{34}"),
    _row("n60", "p3*3*(k-2)*(W-(k-4))*(k-6)", "2*n60 + n25",
         r"p_3\cdot 3(k-2)\cdot (|W(K_3)|-(k-4))\cdot (k-6)=2n_{60}+n_{25}"),
    _row("n47", "n*(k/2)*(k-2)*C(n-k-1-2*(k-2)-(k-4), 2)", "n47 + n60",
         r"n\cdot k/2\cdot (k-2) {n-k-1 -2(k-2)-(k-4) \choose 2}=n_{47}+n_{60}"),
    _row("n48", "n*k*(k-2)/2*((k-3)**2) - 2*(k-4)*(n-3*k+4)", "n48 + 2*n35 + 6*n12",
         r"n\cdot \frac{k(k-2)}{2}\cdot((k-3)^2)-2(k-4)\cdot(n-3k+4)=n_{48}+2n_{35}+6n_{12}",
         alternatives={
             "grouped": ("n*k*(k-2)/2*((k-3)**2 - 2*(k-4))*(n-3*k+4)", "n48 + 2*n35 + 6*n12"),
         },
         note="parenthesization ambiguous as typeset; the grouped reading applies both "
              "factors to every path"),
    _row("n62", "p3*W*C(k-6, 2)", "n62 + 6*n14", r"p_3\cdot |W| {k-6 \choose 2}=n_{62}+6n_{14}"),
    _row("n49", "p3*W*(k-6)/2*(W-2)", "n49 + 2*n62 + 6*n14",
         r"p_3\cdot \frac{|W|(k-6)}{2}\cdot (|W|-2)=n_{49}+2n_{62}+6n_{14}"),
    _row("n50", "n*k*(k-2)*(k-4)/6*3*(n-k-1-2*(k-3)-1-(k-4))", "n50 + 2*n28",
         r"n\cdot\frac{1}{6}k(k-2)(k-4)\cdot 3(n-k-1-2(k-3)-1-(k-4))=n_{50}+2n_{28}"),
    _row("n51", "n*k/6*3*(k-2)*(k-3)*(k-2)*(k-4)/2", "n51 + n23 + n8",
         r"\frac{nk}{6}\cdot 3(k-2)(k-3)\cdot \frac{1}{2}(k-2)(k-4)=n_{51}+n_{23}+n_{8}"),
    _row("n52", "n*(k/2)*(k-2)*(k-4)/2*(n-k-1-2*(k-2)-2*(k-5)-1)", "n52",
         r"n_{52}=n\cdot \frac{k}{2} \cdot \frac{1}{2}(k-2)(k-4) (n-k-1-2(k-2)-2(k-5)-1)"),
    _row("n53", "p5*(n-10)", "n53 + 2*n10 + n29", r"p_5\cdot (n-10)=n_{53}+2n_{10}+n_{29}"),
    _row("n54", "n*C(k/2, 2)*(n-k-1-2*(k-2)-2*(k-4))", "n54",
         r"n_{54}=n\cdot {k/2\choose2}\cdot (n-k-1-2(k-2)-2(k-4))"),
    _row("n55", "p4*4*(n-8-4*(k-4))", "n55 + n6", r"p_4\cdot 4(n-8-4(k-4))=n_{55}+n_6"),
    _row("n56", "n*(k/2)*(k-2)*(k-4)*(n-k-2-2*(k-2)-(k-4))", "n56 + n25",
         r"n\cdot \frac{k}{2}\cdot (k-2) (k-4)(n-k-2-2(k-2)-(k-4))=n_{56}+n_{25}",
         alternatives={"repaired": ("n*(k/2)*(k-2)*(k-4)*(n-k-1-2*(k-2)-(k-4))", "n56 + n25")},
         note="n-k-1 vertices lie at distance two from v0"),
    _row("n58", "m6*2*(k-3)", "2*n58 + 2*n35 + n25", r"m_6\cdot2(k-3)=2n_{58}+2n_{35}+n_{25}"),
    _row("n57", "E*C(E-3-7*(k-2)-2*(k-2)*(k-4), 2)", "3*m14 + m6 + n60 + 2*n13 + n58 + 3*n57",
         r"|E(G)|{|E(G)|-3-7(k-2)-2(k-2)(k-4) \choose 2} =3m_{14}+m_6+n_{60}+2n_{13}+n_{58}+3n_{57}"),
    _row("n59", "n*k*(k-2)*(k-4)/6*(E - 3*k/2 - k*(k-2) - 3*(k/2-1))",
         "n59 + n34 + n29 + 2*n28 + 2*n10",
         r"n\cdot\frac{1}{6}k(k-2)(k-4)\cdot(|E(G)|-\frac{3}{2}k-k(k-2)-3(\frac{k}{2}-1))"
         r"=n_{59}+n_{34}+n_{29}+2n_{28}+2n_{10}"),
    _row("n61", "2*m3", "2*n61 + 2*n32 + n34 + n20 + n26", r"2m_3=2n_{61}+2n_{32}+n_{34}+n_{20}+n_{26}"),
    _row("n43", "p3*C(W, 3)", "n43 + n62 + n49 + 2*n14", r"p_3{W\choose 3}=n_{43}+n_{62}+n_{49}+2n_{14}"),
    _row("n42", "m3*2*(k-3)", "2*n42 + 2*n48 + n34", r"m_3\cdot 2(k-3)=2n_{42}+2n_{48}+n_{34}"),
    _row("n41", "m3*2*(k-2)", "2*n41 + 2*n48 + n46 + 2*n51 + n50",
         r"m_3\cdot 2(k-2)=2n_{41}+2n_{48}+n_{46}+2n_{51}+n_{50}"),
    _row("n40", "n*k*(k-2)*(k-4)/6*C(n-k-1-3-3*(k-4), 2)", "n40 + n54",
         r"n\cdot \frac{k(k-2)(k-4)}{6}\cdot {n-k-1-3-3(k-4) \choose 2}=n_{40}+n_{54}"),
    _row("n39", "m4*(n-k-5)", "n54 + n56 + 3*n49 + n48 + 2*n41 + 2*n39",
         r"m_4\cdot (n-k-5)=n_{54}+n_{56}+3n_{49}+n_{48}+2n_{41}+2n_{39}"),
    _row("n38", "n*k*(k-2)/2*C(n-3*k+4, 3)", "n38 + n41 + 2*n61 + n62",
         r"n \cdot \frac{k(k-2)}{2}\cdot {n-3k+4\choose 3}=n_{38}+n_{41}+2n_{61}+n_{62}"),
    _row("n37", "m1*5*k", "2*n37 + 2*n38 + 3*n40 + 4*n44 + 5*n30",
         r"m_1\cdot 5k=2n_{37}+2n_{38}+3n_{40}+4n_{44}+5n_{30}"),
    _row("n36", "m1*(n-5)", "n30 + 6*n36 + 2*n37 + n38 + n40 + n44",
         r"m_1(n-5)=n_{30}+6n_{36}+2n_{37}+n_{38}+n_{40}+n_{44}"),
    _row("pentagons-per-path", "5*p5", "2*(k-4)*n*k*(k-2)/2",
         r"5\cdot \frac{1}{5}nk(k-2)(k-4)/\frac{1}{2}nk(k-2)=2(k-4)", group="definition"),
]

L_ROWS = [
    _row("l1", "l1*(n-4)", "5*m1 + 2*m2 + m3 + m5 + m9", r"l_1(n-4)=5m_1+2m_2+m_3+m_5+m_9", group="l"),
    _row("l2", "l2*(n-4)", "3*m2 + 2*m3 + 4*m4 + m6 + 2*m7 + 3*m8 + m11 + m12 + m17",
         r"l_2(n-4)=3m_2+2m_3+4m_4+m_6+2m_7+3m_8+m_11+m_12+m_17", group="l",
         note="typeset m_11 read as m11"),
    _row("l3", "l3*(n-4)", "m4 + 2*m6 + m13 + 3*m14 + m19 + m21",
         r"l_3(n-4)=m_4+2m_6+m_{13}+3m_{14}+m_{19}+m_{21}", group="l"),
    _row("l4", "l4*(n-4)", "2*m3 + 3*m5 + 2*m6 + 2*m8 + 4*m10 + m11 + 2*m12 + 2*m13 + m15 + 2*m16",
         r"l_4(n-4)=2m_3+3m_5+2m_6+2m_8+4m_{10}+m_{11}+2m_{12}+2m_{13}+m_{15}+2m{16}", group="l",
         note="typeset 2m{16} read as 2*m16; 2m_8 reads 2m7 so that each class of order five loses five vertices in total",
         alternatives={"repaired": ("l4*(n-4)",
                                    "2*m3 + 3*m5 + 2*m6 + 2*m7 + 4*m10 + m11 + 2*m12 + 2*m13 + m15 + 2*m16")}),
    _row("l5", "l5*(n-4)", "m7 + 2*m11 + 2*m13 + 2*m15 + m16 + 5*m19 + 2*m20 + 2*m21",
         r"l_5(n-4)=m_7+2m_{11}+2m_{13}+2m_{15}+m_{16}+5m_{19}+2m_{20}+2m_{21}", group="l",
         alternatives={"repaired": ("l5*(n-4)", "m7 + 2*m11 + 2*m13 + 2*m15 + m16 + 5*m18 + 2*m20 + 2*m21")},
         note="5m_{19} reads 5m18 so that each class of order five loses five vertices in total"),
    _row("l6", "l6*(n-4)", "m5 + 4*m9 + m11 + m15 + 2*m17",
         r"l_6(n-4)=m_5+4m_9+m_{11}+m_{15}+2m_{17}", group="l"),
    _row("l7", "l7*(n-4)", "2*m8 + m12 + 2*m14 + m21", r"l_7(n-4)=2m_8+m_{12}+2m_{14}+m_{21}", group="l"),
    _row("l8", "l8*(n-4)", "m10 + m15 + m20", r"l_8(n-4)=m_{10}+m_{15}+m_{20}", group="l"),
    _row("l9", "l9*(n-4)", "m12 + 2*m16 + 2*m17 + 4*m19 + 2*m20 + m21",
         r"l_9(n-4)=m_{12}+2m_{16}+2m_{17}+4m_{19}+2m_{20}+m_{21}", group="l"),
]

M_ROWS = [
    _row("m1", "m1*(n-5)", "n30 + 6*n36 + 2*n37 + n38 + n40 + n44",
         r"m_1(n-5)=n_{30}+6n_{36}+2n_{37}+n_{38}+n_{40}+n_{44}", group="m"),
    _row("m2", "m2*(n-5)", "n19 + n31 + 4*n37 + 2*n38 + 4*n39 + n41 + 2*n42 + 3*n43 + n46 + n47 + n52 + n59",
         r"m_2(n-5)=n_{19}+n_{31}+4n_{37}+2n_{38}+4n_{39}+n_{41}+2n_{42}+3n_{43}+n_{46}+n_{47}+n_{52}+n_{59}",
         group="m"),
    _row("m3", "m3*(n-5)",
         "n20 + n26 + 2*n32 + n34 + 3*n38 + 3*n40 + 2*n41 + 2*n42 + 4*n45 + n46 + 2*n47 + 2*n48"
         " + n50 + 2*n51 + 2*n61",
         r"m_3(n-5)=n_{20}+n_{26}+2n_{32}+n_{34}+3n_{38}+3n_{40}+ 2n_{41}+ 2n_{42}+ 4n_{45} +n_{46}+2n_{47}"
         r"+2n_{48}+n_{50}+2n_{51}+2n_{61}", group="m"),
    _row("m4", "m4*(n-5)", "n15 + n22 + n33 + 2*n39 + 2*n41 + n48 + 3*n49 + n54 + n56 + 6*n57 + 2*n58 + n60",
         r"m_4(n-5)=n_{15}+n_{22}+n_{33}+2n_{39}+2n_{41}+n_{48}+3n_{49}+n_{54}+n_{56}+6n_{57}+2n_{58}+n_{60}",
         group="m"),
    _row("m5", "m5*(n-5)", "n20 + 2*n28 + n31 + n34 + 2*n40 + 4*n44 + n46 + n50 + 2*n52 + 2*n59",
         r"m_5(n-5)=n_{20}+2n_{28}+n_{31}+n_{34}+2n_{40}+4n_{44}+n_{46}+n_{50}+2n_{52}+2n_{59}", group="m"),
    _row("m6", "m6*(n-5)",
         "n7 + n11 + 4*n13 + n16 + n23 + n24 + n25 + n34 + 2*n35 + n41 + 2*n58 + 3*n59"
         " + 2*n60 + 4*n61 + 3*n62",
         r"m_6(n-5)=n_{7}+n_{11}+4n_{13}+n_{16}+n_{23}+n_{24}+n_{25}+n_{34}+ 2n_{35}+ n_{41}+2n_{58}+3n_{59}"
         r"+2n_{60}+4n_{61}+3n_{62}", group="m"),
    _row("m7", "m7*(n-5)",
         "n17 + 3*n21 + 2*n27 + n29 + 2*n33 + 2*n35 + 2*n42 + 2*n46 + 2*n48 + 2*n50 + n51 + 5*n53"
         " + 2*n55 + 2*n56 + 2*n58",
         r"m_7(n-5)=n_{17}+3n_{21}+2n_{27}+n_{29}+2n_{33}+2n_{35}+2n_{42} +2n_{46}+2n_{48}+2n_{50}+n_{51}"
         r"+5n_{53}+2n_{55}+2n_{56}+2n_{58}", group="m",
         alternatives={"repaired": ("m7*(n-5)",
                                    "n17 + 3*n21 + n23 + 2*n27 + n29 + 2*n33 + 2*n35 + 2*n42 + 2*n46 + 2*n48"
                                    " + 2*n50 + n51 + 5*n53 + 2*n55 + 2*n56 + 2*n58")},
         note="n23 term missing: every other class of order six is reached six times across these rows"),
    _row("m8", "m8*(n-5)", "n24 + 3*n43 + n47 + 2*n49 + n56 + n62",
         r"m_8(n-5)=n_{24}+3n_{43}+n_{47}+2n_{49}+n_{56}+n_{62}", group="m"),
    _row("m9", "m9*(n-5)", "2*n19 + n26 + 5*n30 + n31 + n44",
         r"m_9(n-5)=2n_{19}+n_{26}+5n_{30}+n_{31}+n_{44}", group="m"),
    _row("m10", "m10*(n-5)", "n6 + n11 + 2*n13 + 2*n45 + n50 + n55",
         r"m_{10}(n-5)=n_{6}+n_{11}+2n_{13}+2n_{45}+n_{50}+n_{55}", group="m"),
    _row("m11", "m11*(n-5)",
         "2*n10 + n11 + n17 + n18 + n20 + 2*n22 + 2*n24 + 2*n26 + 2*n27 + 2*n29 + 3*n31 + 4*n32"
         " + 2*n33 + n34 + n46",
         r"m_{11}(n-5)=2n_{10}+n_{11}+n_{17}+n_{18}+n_{20}+2n_{22}+ 2n_{24}+ 2n_{26}+ 2n_{27}+ 2n_{29}"
         r"+3n_{31}+4n_{32}+2n_{33}+n_{34}+n_{46}", group="m"),
    _row("m12", "m12*(n-5)",
         "n16 + n18 + n22 + n23 + n25 + 2*n47 + 2*n51 + 2*n52 + 4*n54 + 2*n55 + n56 + 2*n60",
         r"m_{12}(n-5)=n_{16}+n_{18}+n_{22}+n_{23}+n_{25}+2n_{47}+ 2n_{51}+ 2n_{52}+ 4n_{54}+ 2n_{55}"
         r"+ n_{56}+ 2n_{60}", group="m"),
    _row("m13", "m13*(n-5)",
         "n2 + 2*n6 + 2*n8 + 2*n9 + 2*n11 + 6*n12 + n18 + n23 + 2*n25 + 2*n28 + 2*n29 + n33"
         " + 2*n34 + 2*n35 + n48",
         r"m_{13}(n-5)=n_{2}+2n_{6}+2n_{8}+2n_{9}+2n_{11}+6n_{12}+n_{18}+n_{23}+ 2n_{25}+ 2n_{28}+ 2n_{29}"
         r"+ n_{33}+2n_{34}+2n_{35}+n_{48}", group="m"),
    _row("m14", "m14*(n-5)", "2*n5 + 6*n14 + n25 + n49 + n60 + 2*n62",
         r"m_{14}(n-5)=2n_{5}+6n_{14}+n_{25}+n_{49}+n_{60}+2n_{62}", group="m"),
    _row("m15", "m15*(n-5)",
         "2*n4 + 2*n7 + 4*n9 + 2*n10 + n11 + n17 + n18 + 2*n26 + 2*n27 + 2*n28 + n50",
         r"m_{15}(n-5)=2n_{4}+2n_{7}+4n_{9}+2n_{10}+n_{11}+n_{17}+n_{18}+2n_{26}+ 2n_{27}+ 2n_{28}+ n_{50}",
         group="m"),
    _row("m16", "m16*(n-5)", "2*n2 + n4 + 2*n6 + n8 + 2*n16 + n17 + 2*n20 + 3*n21 + n23 + n51",
         r"m_{16}(n-5)=2n_{2}+n_{4}+2n_{6}+n_{8}+2n_{16} +n_{17} +2n_{20} +3n_{21}+n_{23} +n_{51}",
         group="m"),
    _row("m17", "m17*(n-5)", "n7 + 4*n15 + n17 + 3*n19 + n20 + n22 + n52",
         r"m_{17}(n-5)=n_{7}+4n_{15}+n_{17}+3n_{19}+n_{20}+n_{22}+n_{52}", group="m"),
    _row("m18", "m18*(n-5)", "n4 + n8 + 2*n10 + n29 + n53",
         r"m_{18}(n-5)=n_{4}+n_{8}+2n_{10}+n_{29}+n_{53}", group="m"),
    _row("m19", "m19*(n-5)", "n2 + n15 + n16 + n54", r"m_{19}(n-5)=n_{2}+n_{15}+n_{16}+n_{54}", group="m"),
    _row("m20", "m20*(n-5)", "6*n1 + 2*n2 + 2*n3 + 2*n4 + n6 + n17 + n18 + n55",
         r"m_{20}(n-5)=6n_{1}+2n_{2}+2n_{3}+2n_{4}+n_{6}+n_{17}+n_{18}+n_{55}", group="m"),
    _row("m21", "m21*(n-5)", "4*n3 + 4*n5 + 2*n7 + 2*n8 + n16 + n18 + n22 + n23 + 2*n24 + n25 + n56",
         r"m_{21}(n-5)=4n_{3}+4n_{5}+2n_{7}+2n_{8}+n_{16}+n_{18}+n_{22}+n_{23}+2n_{24}+n_{25}+n_{56}",
         group="m"),
]

SUM_ROWS = [
    _row("sum-l", "C(n, 4)", " + ".join(f"l{i}" for i in range(1, 10)), r"\sum l_i = {n \choose 4}", group="sum"),
    _row("sum-m", "C(n, 5)", " + ".join(f"m{i}" for i in range(1, 22)), r"\sum m_i = {n \choose 5}", group="sum"),
    _row("sum-n", "C(n, 6)", " + ".join(f"n{i}" for i in range(1, 63)), r"\sum n_i = {n \choose 6}", group="sum"),
]

EQUATION_ROWS = CONSTRUCTION_ROWS + L_ROWS + M_ROWS + SUM_ROWS
