use std::path::PathBuf;

use super::tableau::{parse_tableaux, Tableau};
use crate::error::{Error, Result};
use crate::semigroup::DATA_DIR_ENV;

const BUNDLED: &[(&str, &str)] = &[
    ("tableaux_34_6_2", include_str!("../../data/tableaux_34_6_2.txt")),
    ("tableaux_47_7_2", include_str!("../../data/tableaux_47_7_2.txt")),
    ("chow_witnesses_3x6", include_str!("../../data/chow_witnesses_3x6.txt")),
    ("chow_witnesses_4x7", include_str!("../../data/chow_witnesses_4x7.txt")),
];

pub const FIXTURE_IDS: &[&str] = &["tableaux_34_6_2", "tableaux_47_7_2", "chow_witnesses_3x6", "chow_witnesses_4x7"];

/// Loads a bundled tableau list by id, or `<id>.txt` from `$PLETH_DATA_DIR`.
pub fn load_tableaux_fixture(id: &str) -> Result<Vec<Tableau>> {
    let Some(&(_, bundled)) = BUNDLED.iter().find(|(k, _)| *k == id) else {
        return Err(Error::UnknownFamily(id.to_string()));
    };
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(format!("{id}.txt"));
            let text = std::fs::read_to_string(&path).map_err(|e| Error::io(path.display().to_string(), e))?;
            parse_tableaux(&text)
        }
        None => parse_tableaux(bundled),
    }
}

/// Witness tableaux for the generators of `"3x6"` or `"4x7"`.
pub fn load_witnesses(family: &str) -> Result<Vec<Tableau>> {
    load_tableaux_fixture(&format!("chow_witnesses_{family}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_parse() {
        let sizes: Vec<usize> = FIXTURE_IDS.iter().map(|id| load_tableaux_fixture(id).unwrap().len()).collect();
        assert_eq!(sizes, [8, 11, 89, 948]);
        assert!(load_tableaux_fixture("nope").is_err());
    }
}
