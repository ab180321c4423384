//! Interpretation of multi-patterns as timed note events under a rooted
//! scale and a tempo, with ABC text and JSON event-list export.

mod abc;
mod json;
mod phrase;
mod scale;

pub use abc::{to_abc, AbcHeader};
pub use json::to_json_events;
pub use phrase::{render, NoteEvent, Phrase};
pub use scale::{Note, RootedScale, Scale, Tempo};
