//! Sequence tables and polynomials transcribed verbatim from the source
//! publication, including entries that are known to be wrong.

use crate::transforms::TransformKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableFixture {
    pub label: &'static str,
    pub kind: TransformKind,
    pub k: i64,
    pub values: &'static [u64],
    pub citation: &'static str,
    pub oeis_note: Option<&'static str>,
}

const UNIT_NOTE: Option<&str> = Some("A052995-{0} or A055819-{1}");

macro_rules! table {
    ($label:literal, $kind:ident, $k:literal, [$($v:literal),*], $cite:literal, $note:expr) => {
        TableFixture {
            label: $label,
            kind: TransformKind::$kind,
            k: $k,
            values: &[$($v),*],
            citation: $cite,
            oeis_note: $note,
        }
    };
}

pub const BINOMIAL_TABLES: [TableFixture; 5] = [
    table!("B1", Binomial, 1, [2, 4, 10, 26, 68, 178], "binomial transform list B_1", UNIT_NOTE),
    table!("B2", Binomial, 2, [2, 4, 12, 40, 136, 464], "binomial transform list B_2", Some("A056236")),
    table!("B3", Binomial, 3, [2, 4, 14, 58, 248, 1066], "binomial transform list B_3", None),
    table!("B4", Binomial, 4, [2, 4, 16, 80, 416, 2176], "binomial transform list B_4", None),
    table!("B5", Binomial, 5, [2, 4, 18, 106, 652, 4034], "binomial transform list B_5", None),
];

pub const KBINOMIAL_TABLES: [TableFixture; 5] = [
    table!("W1", KBinomial, 1, [2, 4, 10, 26, 68, 178], "k-binomial transform list W_1", UNIT_NOTE),
    table!("W2", KBinomial, 2, [2, 8, 96, 320, 1088, 3712], "k-binomial transform list W_2", None),
    table!("W3", KBinomial, 3, [2, 12, 378, 1566, 6696, 28782], "k-binomial transform list W_3", None),
    table!("W4", KBinomial, 4, [2, 16, 1024, 5120, 26624], "k-binomial transform list W_4", None),
    table!("W5", KBinomial, 5, [2, 20, 2250, 13250, 81500], "k-binomial transform list W_5", None),
];

pub const RISING_TABLES: [TableFixture; 5] = [
    table!("R1", RisingK, 1, [2, 4, 10, 26, 68, 178], "rising k-binomial transform list R_1", UNIT_NOTE),
    table!("R2", RisingK, 2, [2, 6, 34, 198, 1154, 6726], "rising k-binomial transform list R_2", None),
    table!("R3", RisingK, 3, [2, 8, 86, 938, 10232], "rising k-binomial transform list R_3", None),
    table!("R4", RisingK, 4, [2, 10, 178, 3194, 57314], "rising k-binomial transform list R_4", None),
    table!("R5", RisingK, 5, [2, 12, 322, 8682, 234092], "rising k-binomial transform list R_5", None),
];

pub const FALLING_TABLES: [TableFixture; 5] = [
    table!("F1", FallingK, 1, [2, 4, 10, 26, 68, 178], "falling k-binomial transform list F_1", UNIT_NOTE),
    table!("F2", FallingK, 2, [2, 6, 22, 90, 386, 1686], "falling k-binomial transform list F_2", None),
    table!("F3", FallingK, 3, [2, 8, 38, 206, 1208, 7370], "falling k-binomial transform list F_3", None),
    table!("F4", FallingK, 4, [2, 10, 58, 386, 2834, 22042], "falling k-binomial transform list F_4", None),
    table!("F5", FallingK, 5, [2, 12, 82, 642, 5612, 52722], "falling k-binomial transform list F_5", None),
];

/// Printed `M(k, n)` for `n = 2..=5`, ascending coefficients in `k`.
pub const PRINTED_M_POLYS: [(usize, &[i64]); 4] = [
    (2, &[2, 2]),
    (3, &[2, 2, 2]),
    (4, &[2, 4, 2, 2]),
    (5, &[2, 4, 6, 2, 2]),
];

/// Every table checked by the B/R/F claim, in report order.
pub fn brf_tables() -> impl Iterator<Item = &'static TableFixture> {
    BINOMIAL_TABLES
        .iter()
        .chain(RISING_TABLES.iter())
        .chain(FALLING_TABLES.iter())
}
