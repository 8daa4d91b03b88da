//! IDN homograph detection built on an automatically constructed homoglyph
//! database.
//!
//! The pipeline has three stages:
//!
//! 1. **Database construction** ([`font`], [`tables`], [`simchar`]): parse a
//!    GNU-Unifont-style `.hex` font, restrict it to IDNA2008 PVALID code
//!    points, and pair up every two glyphs whose 32×32 bitmaps differ in at
//!    most θ pixels. The result is merged with the Unicode confusables list
//!    into a single [`tables::HomoglyphDB`].
//! 2. **Corpus ingestion** ([`punycode`], [`ingest`]): decode `xn--` labels
//!    per RFC 3492 and deduplicate large registered-domain lists into a
//!    corpus of IDNs plus a ranked reference set.
//! 3. **Detection** ([`detector`]): match every IDN against every reference
//!    label of the same length, character by character, where each position
//!    must be equal or a database pair; matched domains can be reverted to
//!    candidate ASCII originals.
//!
//! With the default `parallel` feature the heavy loops (pairwise glyph
//! comparison, corpus decoding, reference scanning) run on rayon; disabling
//! it falls back to the equivalent sequential code paths, which remain
//! exported as `*_seq` for benchmarking and differential testing.

pub mod detector;
pub mod font;
pub mod ingest;
pub mod punycode;
pub mod simchar;
pub mod tables;

pub use detector::{detect, is_homograph, revert, HomographMatch, RevertCandidate};
pub use font::{load_font, parse_hex_line, GlyphBitmap32, GlyphSet, RawGlyph};
pub use ingest::{load_corpus, load_references, DomainCorpus, ReferenceSet};
pub use punycode::{punycode_decode, punycode_encode, to_unicode, DomainName};
pub use simchar::{build_simchar, delta, deserialize_db, serialize_db, DeltaParams};
pub use tables::{load_confusables, load_pvalid, merge, CodePointSet, HomoglyphDB, PairSource};
