//! Shipped language profiles and profile lookup.

use std::path::{Path, PathBuf};

use syltok_core::{EnglishSyllabifier, LanguageProfile, Segmenter};

use crate::error::{Error, Result};

/// Environment variable naming a directory of `<lang>.profile` files that
/// take precedence over the shipped ones.
pub const PROFILE_DIR_ENV: &str = "SYLTOK_PROFILE_DIR";

const SHIPPED: [(&str, &str); 4] = [
    ("es", include_str!("../profiles/es.profile")),
    ("fi", include_str!("../profiles/fi.profile")),
    ("tr", include_str!("../profiles/tr.profile")),
    ("shp", include_str!("../profiles/shp.profile")),
];

/// Language ids with a built-in syllabifier: `en` plus the shipped profiles.
pub fn builtin_languages() -> Vec<&'static str> {
    let mut v = vec!["en"];
    v.extend(SHIPPED.iter().map(|(id, _)| *id));
    v
}

pub fn shipped_profile(lang: &str) -> Option<&'static str> {
    SHIPPED
        .iter()
        .find(|(id, _)| *id == lang)
        .map(|(_, doc)| *doc)
}

pub fn load_profile_file(path: &Path) -> Result<LanguageProfile> {
    let doc = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    LanguageProfile::parse(&doc).map_err(|source| Error::Profile {
        name: path.display().to_string(),
        source,
    })
}

fn override_path(lang: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(PROFILE_DIR_ENV)?;
    let path = Path::new(&dir).join(format!("{lang}.profile"));
    path.is_file().then_some(path)
}

/// Builds the syllabifier for `lang`.
///
/// Lookup order: `$SYLTOK_PROFILE_DIR/<lang>.profile`, the English rules for
/// `en`, then the shipped profiles.
pub fn syllabifier_for(lang: &str, compounds: Option<Vec<String>>) -> Result<Segmenter> {
    if let Some(path) = override_path(lang) {
        return Ok(Segmenter::Profile(load_profile_file(&path)?));
    }
    if lang == "en" {
        let en = match compounds {
            Some(words) => EnglishSyllabifier::with_compounds(words),
            None => EnglishSyllabifier::new(),
        };
        return Ok(Segmenter::English(en));
    }
    let doc = shipped_profile(lang).ok_or_else(|| {
        Error::Usage(format!(
            "no profile for language {lang:?}; built in: {}; or set {PROFILE_DIR_ENV}",
            builtin_languages().join(", ")
        ))
    })?;
    LanguageProfile::parse(doc)
        .map(Segmenter::Profile)
        .map_err(|source| Error::Profile {
            name: lang.to_owned(),
            source,
        })
}
