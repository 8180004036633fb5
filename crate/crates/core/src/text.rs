//! Word tokenization shared by the diff and the metrics.
//!
//! Words are split on whitespace; punctuation marks become tokens of their
//! own; an elided article or pronoun keeps its apostrophe (`l'esprit` gives
//! `l'` and `esprit`). A run of dots is a single token, so the ellipses in
//! the printed candidates behave as punctuation.

/// Punctuation characters that always stand alone.
pub fn is_punct(c: char) -> bool {
    matches!(
        c,
        '.' | ',' | ';' | ':' | '!' | '?' | '«' | '»' | '"' | '(' | ')' | '[' | ']' | '…' | '—' | '–'
            | '¶' | '“' | '”'
    )
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '’'
}

/// Tokenize `text` preserving case.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        let chars: Vec<char> = chunk.chars().collect();
        let mut word = String::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == '.' {
                flush(&mut word, &mut out);
                let mut dots = String::new();
                while i < chars.len() && chars[i] == '.' {
                    dots.push('.');
                    i += 1;
                }
                out.push(dots);
                continue;
            }
            if is_punct(c) {
                flush(&mut word, &mut out);
                out.push(c.to_string());
            } else if is_apostrophe(c) {
                if word.is_empty() {
                    out.push("'".to_string());
                } else {
                    word.push('\'');
                    flush(&mut word, &mut out);
                }
            } else {
                word.push(c);
            }
            i += 1;
        }
        flush(&mut word, &mut out);
    }
    out
}

/// Tokenize and lowercase.
pub fn tokenize_lower(text: &str) -> Vec<String> {
    tokenize(&text.to_lowercase())
}

fn flush(word: &mut String, out: &mut Vec<String>) {
    if !word.is_empty() {
        out.push(std::mem::take(word));
    }
}

/// True when the token consists only of punctuation.
pub fn is_punct_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| is_punct(c) || is_apostrophe(c))
}

/// Starts with a vowel or a mute `h`, the French elision trigger.
pub fn starts_with_vowel(word: &str) -> bool {
    word.chars()
        .next()
        .map(|c| "aeiouyhàâäéèêëîïôöûùüœæAEIOUYHÀÂÄÉÈÊËÎÏÔÖÛÙÜŒÆ".contains(c))
        .unwrap_or(false)
}

/// Uppercase the first character.
pub fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Join tokens with single spaces, closing up before punctuation and after
/// elided words.
pub fn detokenize<S: AsRef<str>>(tokens: &[S]) -> String {
    let mut out = String::new();
    let mut glue = true;
    for tok in tokens {
        let t = tok.as_ref();
        let closes = t.starts_with([',', '.', ';', ':', '!', '?', ')', ']', '»', '…']);
        if !glue && !closes {
            out.push(' ');
        }
        out.push_str(t);
        glue = t.ends_with('\'') || t.ends_with(['(', '[', '«']);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detokenize_closes_up() {
        let toks = tokenize("l'esprit de la vie, qu'il apparaissait: oui.");
        assert_eq!(detokenize(&toks), "l'esprit de la vie, qu'il apparaissait: oui.");
        assert_eq!(detokenize::<&str>(&[]), "");
    }

    #[test]
    fn splits_punctuation_and_elision() {
        assert_eq!(
            tokenize("l'esprit de la vie, qu'il"),
            vec!["l'", "esprit", "de", "la", "vie", ",", "qu'", "il"]
        );
    }

    #[test]
    fn ellipsis_is_one_token() {
        assert_eq!(tokenize("vêtue ... d'une"), vec!["vêtue", "...", "d'", "une"]);
        assert_eq!(tokenize("terriblement..."), vec!["terriblement", "..."]);
    }

    #[test]
    fn brackets_and_guillemets() {
        assert_eq!(
            tokenize("neuvième [année]. « Elle"),
            vec!["neuvième", "[", "année", "]", ".", "«", "Elle"]
        );
    }

    #[test]
    fn hyphenated_words_stay_whole() {
        assert_eq!(tokenize("ceux-ci, moment-là"), vec!["ceux-ci", ",", "moment-là"]);
    }

    #[test]
    fn curly_apostrophe_normalized() {
        assert_eq!(tokenize("d’un"), vec!["d'", "un"]);
    }
}
