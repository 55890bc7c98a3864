use std::sync::OnceLock;

use super::Morphism;
use crate::error::{Error, Result};

/// Published image widths for k = 2..=8.
pub const MU_WIDTHS: [usize; 7] = [7, 14, 12, 27, 23, 36, 30];

const MU_TABLES: [[&str; 3]; 7] = [
    ["0310213", "0230132", "0120321"],
    ["10231402310243", "01243024130243", "01240312401234"],
    ["012350412534", "012345103245", "012340521345"],
    [
        "012345601235460235146023546",
        "012345601234650134625013465",
        "012345061234065123460152346",
    ],
    [
        "01234560172436501243756",
        "01234560127354061235476",
        "01234560123746510324657",
    ],
    [
        "012345670812345608721345687201345678",
        "012345670182345601872345618702345687",
        "012345670128345670281345762801345768",
    ],
    [
        "012345678902315647890312645789",
        "012345678902143675982014365789",
        "012345678019324568079123548679",
    ],
];

fn build(k: usize) -> Result<Morphism> {
    let table = &MU_TABLES[k - 2];
    let alphabet = k + 2;
    let rows: Vec<Vec<u8>> = table.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect();
    let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
    let m = Morphism::from_rows(&refs, alphabet)?;
    if m.uniform_width() != Some(MU_WIDTHS[k - 2]) {
        return Err(Error::arg(format!(
            "mu_{k}: width {:?}, expected {}",
            m.uniform_width(),
            MU_WIDTHS[k - 2]
        )));
    }
    let used = rows.iter().flatten().map(|&s| s as usize).max().unwrap_or(0) + 1;
    if used != alphabet {
        return Err(Error::arg(format!(
            "mu_{k}: images use {used} symbols, expected {alphabet}"
        )));
    }
    Ok(m)
}

fn tables() -> &'static std::result::Result<Vec<Morphism>, Error> {
    static TABLES: OnceLock<std::result::Result<Vec<Morphism>, Error>> = OnceLock::new();
    TABLES.get_or_init(|| (2..=8).map(build).collect())
}

/// Re-derives every embedded table and checks widths and alphabet sizes.
pub fn mu_self_check() -> Result<()> {
    tables().as_ref().map(|_| ()).map_err(Clone::clone)
}

/// The 3-letter-domain uniform morphism for `k` in `2..=8`.
pub fn builtin_mu(k: usize) -> Result<Morphism> {
    if !(2..=8).contains(&k) {
        return Err(Error::arg(format!("no built-in morphism for k = {k}")));
    }
    match tables() {
        Ok(all) => Ok(all[k - 2].clone()),
        Err(e) => Err(e.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::is_k_thue;

    #[test]
    fn widths_and_alphabets() {
        mu_self_check().unwrap();
        for k in 2..=8 {
            let m = builtin_mu(k).unwrap();
            assert_eq!(m.uniform_width(), Some(MU_WIDTHS[k - 2]));
            assert_eq!(m.codomain_size(), k + 2);
            assert_eq!(m.domain_size(), 3);
        }
        assert!(builtin_mu(1).is_err());
        assert!(builtin_mu(9).is_err());
    }

    #[test]
    fn table_spot_checks() {
        let m6 = builtin_mu(6).unwrap();
        assert!(m6.rows().iter().all(|r| r.starts_with(&[0, 1, 2, 3, 4, 5, 6, 0])));
        let m3 = builtin_mu(3).unwrap();
        assert_eq!(m3.rows()[1], &[0, 1, 2, 4, 3, 0, 2, 4, 1, 3, 0, 2, 4, 3]);
        assert_eq!(builtin_mu(8).unwrap().codomain_size(), 10);
    }

    #[test]
    fn each_image_is_k_thue() {
        for k in 2..=8 {
            for img in builtin_mu(k).unwrap().images() {
                assert_eq!(is_k_thue(img, k), None, "k={k}");
            }
        }
    }
}
