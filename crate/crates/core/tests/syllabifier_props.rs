mod oracles;

use proptest::prelude::*;
use syltok_core::syllabifier::{EnglishSyllabifier, LanguageProfile, Method};

fn toy() -> LanguageProfile {
    LanguageProfile::parse(oracles::TOY_PROFILE).unwrap()
}

const ES: &str = "
language = es
vowels = a e i o u á é ó ü
hiatus = í ú
diphthongs = ai au ei eu oi ou ia ie io iu ua ue ui uo
digraphs = ch ll rr qu
onsets = b c d f g h j k l m n ñ p q r s t v w x y z ch ll rr qu
onsets = bl br cl cr dr fl fr gl gr kl kr pl pr tr
codas = b c d f g j k l m n p r s t x y z ns bs rs ds ls
";

#[test]
fn toy_profile_matches_exhaustive_oracle_up_to_six_graphemes() {
    let p = toy();
    for w in oracles::all_words(&oracles::TOY_ALPHABET, 6) {
        let got = p.syllabify(&w).ok().map(|s| s.syllables);
        assert_eq!(got, oracles::toy_syllabify(&w), "word {w:?}");
    }
}

#[test]
fn spanish_examples_agree_with_hand_splits() {
    let es = LanguageProfile::parse(ES).unwrap();
    for (w, want) in [
        ("pelota", vec!["pe", "lo", "ta"]),
        ("a", vec!["a"]),
        ("instante", vec!["ins", "tan", "te"]),
        ("chorro", vec!["cho", "rro"]),
    ] {
        assert_eq!(es.syllabify(w).unwrap().syllables, want);
    }
    assert!(es.syllabify("xyz").is_err());
}

fn toy_word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(oracles::TOY_ALPHABET.to_vec()), 7..=8)
        .prop_map(|gs| gs.concat())
}

fn es_word() -> impl Strategy<Value = String> {
    "[a-zñáéíóúü]{1,12}"
}

proptest! {
    #[test]
    fn toy_profile_matches_oracle_on_longer_words(w in toy_word()) {
        let got = toy().syllabify(&w).ok().map(|s| s.syllables);
        prop_assert_eq!(got, oracles::toy_syllabify(&w));
    }

    #[test]
    fn profile_output_concatenates_and_has_vowels(w in es_word()) {
        let es = LanguageProfile::parse(ES).unwrap();
        if let Ok(s) = es.syllabify(&w) {
            prop_assert_eq!(s.syllables.concat(), w.clone());
            prop_assert_eq!(s.method, Method::Profile);
            for syl in &s.syllables {
                prop_assert!(syl.chars().any(|c| "aeiouáéíóúü".contains(c)), "{:?}", s);
            }
            prop_assert_eq!(es.syllabify(&w).unwrap(), s);
        }
    }

    #[test]
    fn profile_is_case_preserving(w in "[a-zñ]{1,10}") {
        let es = LanguageProfile::parse(ES).unwrap();
        let upper = w.to_uppercase();
        match (es.syllabify(&w), es.syllabify(&upper)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(b.syllables.concat(), upper);
                let lowered: Vec<String> = b.syllables.iter().map(|s| s.to_lowercase()).collect();
                prop_assert_eq!(lowered, a.syllables);
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn english_concatenates_and_every_piece_has_a_vowel(w in "[A-Za-z]{1,14}") {
        let en = EnglishSyllabifier::new();
        if let Ok(s) = en.syllabify(&w) {
            prop_assert_eq!(s.syllables.concat(), w.clone());
            for syl in &s.syllables {
                prop_assert!(
                    syl.chars().any(|c| "aeiouyAEIOUY".contains(c)),
                    "{:?}", s
                );
            }
        } else {
            // `u` after `q` and `y` before a vowel are consonantal.
            prop_assert!(!w.chars().any(|c| "aeioAEIO".contains(c)), "{}", w);
        }
    }
}
