use std::io::Read;
use std::path::Path;

use reluctant_core::Element;

use crate::error::CliError;

/// Reads whitespace-separated integers from `path`, or standard input.
pub fn read_elements(path: Option<&Path>) -> Result<Vec<Element>, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_elements(&text)
}

pub fn parse_elements(text: &str) -> Result<Vec<Element>, CliError> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse().map_err(|_| CliError::Parse {
                index: i + 1,
                token: tok.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_of_any_kind() {
        assert_eq!(parse_elements(" 3\t-2\n\n7 ").unwrap(), vec![3, -2, 7]);
        assert!(parse_elements("").unwrap().is_empty());
    }

    #[test]
    fn rejects_non_integers() {
        assert!(matches!(
            parse_elements("1 2.5 3"),
            Err(CliError::Parse { index: 2, .. })
        ));
        assert!(parse_elements("1,2").is_err());
        assert!(parse_elements("99999999999999999999").is_err());
    }
}
