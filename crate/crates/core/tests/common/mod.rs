#![allow(dead_code)]

use proptest::prelude::*;

use pucci::encoder::{EncodedStream, EncodedToken, Stem};
use pucci::keytable::{Gender, GrammaticalKey, Number, PersonNumber, TenseIdeogram};
use pucci::lexicon::PartOfSpeech;

/// Italian sentences inside the shipped lexicon, beyond the Dante passage.
pub const SAMPLE_SENTENCES: &[&str] = &[
    "Il padre porta il libro alla madre.",
    "Io vedo la casa del mio amico.",
    "Noi andiamo a Roma domani.",
    "Il re non parla mai.",
    "Le donne cantavano nel giardino.",
    "Egli mi ha dato il pane.",
    "Questa città è bella.",
    "La ragazza canta una dolce canzone.",
    "I re parlano.",
];

fn key() -> impl Strategy<Value = GrammaticalKey> {
    prop::sample::select(GrammaticalKey::inventory())
}

fn stem() -> impl Strategy<Value = Stem> {
    let lemma = "[a-zàèéìòù']{1,8}( [a-zàèéìòù']{1,6})?";
    let person = (1u8..=3, any::<bool>()).prop_map(|(p, pl)| {
        PersonNumber::new(p, if pl { Number::Plural } else { Number::Singular })
    });
    (
        lemma,
        prop::sample::select(PartOfSpeech::ALL.to_vec()),
        prop::option::of(prop::sample::select(vec![Gender::Masculine, Gender::Feminine])),
        any::<bool>(),
        prop::option::of((
            prop::sample::select(TenseIdeogram::ALL.to_vec()),
            prop::option::of(person),
        )),
    )
        .prop_map(|(lemma, pos, gender, plural, verb)| {
            let mut s = Stem::new(&lemma, pos);
            s.gender = gender;
            s.plural = plural;
            if let Some((t, p)) = verb {
                s.tense = Some(t);
                s.person = p;
            }
            s
        })
}

fn token() -> impl Strategy<Value = EncodedToken> {
    prop_oneof![
        key().prop_map(EncodedToken::Key),
        stem().prop_map(EncodedToken::Stem),
        "\\PC{0,12}|[\"\\\\\n ,.]{1,4}".prop_map(EncodedToken::Literal),
    ]
}

pub fn stream_strategy() -> impl Strategy<Value = EncodedStream> {
    prop::collection::vec(prop::collection::vec(token(), 1..8), 0..5)
        .prop_map(|sentences| EncodedStream { sentences })
}
