//! Rule-based Italian to French translation through an ideogram
//! interlingua, with the tools used to evaluate it: word diffs, group
//! statistics and BLEU/chrF/METEOR.

pub mod cli;
pub mod corpus;
pub mod decoder;
pub mod diffalign;
pub mod encoder;
pub mod error;
pub mod evalmetrics;
pub mod keytable;
pub mod lexicon;
pub mod morph;
pub mod pipeline;
pub mod reproduce;
pub mod rules;
pub mod text;

pub use error::Error;
