//! The 26 sporadic simple groups: names and factored orders.

use crate::arith::Factored;
use num_bigint::BigUint;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SporadicName {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24Prime,
    HS,
    McL,
    He,
    Ru,
    Suz,
    ON,
    HN,
    Ly,
    Th,
    BabyMonster,
    Monster,
}

pub const ALL_SPORADIC: [SporadicName; 26] = [
    SporadicName::M11,
    SporadicName::M12,
    SporadicName::M22,
    SporadicName::M23,
    SporadicName::M24,
    SporadicName::J1,
    SporadicName::J2,
    SporadicName::J3,
    SporadicName::J4,
    SporadicName::Co1,
    SporadicName::Co2,
    SporadicName::Co3,
    SporadicName::Fi22,
    SporadicName::Fi23,
    SporadicName::Fi24Prime,
    SporadicName::HS,
    SporadicName::McL,
    SporadicName::He,
    SporadicName::Ru,
    SporadicName::Suz,
    SporadicName::ON,
    SporadicName::HN,
    SporadicName::Ly,
    SporadicName::Th,
    SporadicName::BabyMonster,
    SporadicName::Monster,
];

impl SporadicName {
    pub fn from_token(token: &str) -> Option<SporadicName> {
        use SporadicName::*;
        Some(match token {
            "M11" => M11,
            "M12" => M12,
            "M22" => M22,
            "M23" => M23,
            "M24" => M24,
            "J1" => J1,
            "J2" => J2,
            "J3" => J3,
            "J4" => J4,
            "Co1" => Co1,
            "Co2" => Co2,
            "Co3" => Co3,
            "Fi22" => Fi22,
            "Fi23" => Fi23,
            "Fi24'" => Fi24Prime,
            "HS" => HS,
            "McL" => McL,
            "He" => He,
            "Ru" => Ru,
            "Suz" => Suz,
            "O'N" | "ON" => ON,
            "HN" => HN,
            "Ly" => Ly,
            "Th" => Th,
            "B" => BabyMonster,
            "M" => Monster,
            _ => return None,
        })
    }

    pub fn token(&self) -> &'static str {
        use SporadicName::*;
        match self {
            M11 => "M11",
            M12 => "M12",
            M22 => "M22",
            M23 => "M23",
            M24 => "M24",
            J1 => "J1",
            J2 => "J2",
            J3 => "J3",
            J4 => "J4",
            Co1 => "Co1",
            Co2 => "Co2",
            Co3 => "Co3",
            Fi22 => "Fi22",
            Fi23 => "Fi23",
            Fi24Prime => "Fi24'",
            HS => "HS",
            McL => "McL",
            He => "He",
            Ru => "Ru",
            Suz => "Suz",
            ON => "O'N",
            HN => "HN",
            Ly => "Ly",
            Th => "Th",
            BabyMonster => "B",
            Monster => "M",
        }
    }
}

impl fmt::Display for SporadicName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Factored order and its decimal value for each sporadic group. The
/// decimal strings are redundant on purpose: a test multiplies out the
/// factored forms and compares, so a typo in either column is caught.
pub fn sporadic_order_table(name: SporadicName) -> (&'static [(u64, u32)], &'static str) {
    use SporadicName::*;
    match name {
        M11 => (&[(2, 4), (3, 2), (5, 1), (11, 1)], "7920"),
        M12 => (&[(2, 6), (3, 3), (5, 1), (11, 1)], "95040"),
        M22 => (&[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], "443520"),
        M23 => (&[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], "10200960"),
        M24 => (&[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], "244823040"),
        J1 => (&[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], "175560"),
        J2 => (&[(2, 7), (3, 3), (5, 2), (7, 1)], "604800"),
        J3 => (&[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], "50232960"),
        J4 => (
            &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
            "86775571046077562880",
        ),
        Co1 => (
            &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
            "4157776806543360000",
        ),
        Co2 => (&[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)], "42305421312000"),
        Co3 => (&[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)], "495766656000"),
        Fi22 => (&[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)], "64561751654400"),
        Fi23 => (
            &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
            "4089470473293004800",
        ),
        Fi24Prime => (
            &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
            "1255205709190661721292800",
        ),
        HS => (&[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], "44352000"),
        McL => (&[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)], "898128000"),
        He => (&[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)], "4030387200"),
        Ru => (&[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)], "145926144000"),
        Suz => (&[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)], "448345497600"),
        ON => (&[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)], "460815505920"),
        HN => (&[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)], "273030912000000"),
        Ly => (
            &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
            "51765179004000000",
        ),
        Th => (
            &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
            "90745943887872000",
        ),
        BabyMonster => (
            &[
                (2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1),
                (31, 1), (47, 1),
            ],
            "4154781481226426191177580544000000",
        ),
        Monster => (
            &[
                (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1),
                (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1),
            ],
            "808017424794512875886459904961710757005754368000000000",
        ),
    }
}

pub fn sporadic_order(name: SporadicName) -> Factored {
    let (factors, _) = sporadic_order_table(name);
    Factored::from_factors(
        factors.iter().map(|&(p, e)| (BigUint::from(p), e)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn factored_forms_match_decimal_values() {
        for name in ALL_SPORADIC {
            let (_, decimal) = sporadic_order_table(name);
            let f = sporadic_order(name);
            assert_eq!(
                f.value(),
                &BigUint::from_str(decimal).unwrap(),
                "order table inconsistent for {name}"
            );
        }
    }

    #[test]
    fn token_roundtrip() {
        for name in ALL_SPORADIC {
            assert_eq!(SporadicName::from_token(name.token()), Some(name));
        }
    }
}
