//! Graph6 strings and (kappa, alpha, delta) frozen from networkx.

use hopforce::graph::{make_family, parse_graph6, structural_report, write_graph6, Family};

const PETERSEN_G6: &str = "IheA@GUAo";

const FROZEN: [(&str, usize, usize, usize); 40] = [
    ("D?_", 0, 4, 0),
    ("Ehbw", 2, 3, 2),
    ("FFggW", 1, 4, 1),
    ("GaOcKo", 1, 4, 1),
    ("HurMJXz", 3, 4, 3),
    ("I@XQdYP[w", 2, 4, 2),
    ("JHaW`Tp_gG_", 2, 5, 2),
    ("K~f~~}zsFLvZ", 5, 3, 5),
    ("DnC", 1, 3, 1),
    ("ESY_", 1, 3, 1),
    ("FA_a_", 0, 3, 1),
    ("Gwbi}{", 2, 3, 2),
    ("H?mF}ld", 3, 4, 3),
    ("IhZCkA@Q?", 1, 4, 2),
    ("Jh^DqXvnpZ_", 4, 3, 4),
    ("KWx~HKTJqpq[", 4, 4, 4),
    ("D_[", 1, 3, 1),
    ("E`to", 2, 2, 2),
    ("FnrSg", 2, 3, 2),
    ("GJ^BvS", 2, 3, 2),
    ("HAIIWsE", 1, 5, 1),
    ("IjuYG~{y_", 4, 3, 4),
    ("JUIcGqFS[O?", 2, 5, 2),
    ("KAsWWEGbASRy", 0, 6, 0),
    ("DKW", 0, 2, 1),
    ("Ebl?", 1, 3, 1),
    ("FUA?w", 1, 4, 1),
    ("Ggyq]{", 2, 4, 2),
    ("HwzN}nb", 2, 3, 2),
    ("IQwVK`Rhw", 3, 4, 3),
    ("JSRfOoG?OG?", 1, 6, 1),
    (r"K~^\NH[gYSHZ", 4, 3, 4),
    ("DsO", 1, 3, 1),
    ("E?o?", 0, 5, 0),
    ("FrX}o", 3, 3, 3),
    ("G?Byx[", 1, 5, 1),
    ("HgGGCod", 0, 5, 0),
    ("I[P~|~{dO", 4, 3, 4),
    (r"JX{|Q]\rfp?", 5, 3, 5),
    ("Kuw`[E_mQeQc", 3, 5, 3),
];

#[test]
fn petersen_labeling_matches_frozen_graph6() {
    let p = make_family(&Family::Petersen).unwrap();
    assert_eq!(write_graph6(&p), PETERSEN_G6);
    let back = parse_graph6(PETERSEN_G6).unwrap();
    assert_eq!(back, p);
    let rep = structural_report(&p);
    assert_eq!((rep.kappa, rep.alpha, rep.delta), (3, 4, 3));
}

#[test]
fn structure_matches_frozen_values() {
    for (g6, kappa, alpha, delta) in FROZEN {
        let g = parse_graph6(g6).unwrap();
        assert_eq!(write_graph6(&g), g6);
        let rep = structural_report(&g);
        assert_eq!((rep.kappa, rep.alpha, rep.delta), (kappa, alpha, delta), "{g6}");
    }
}
