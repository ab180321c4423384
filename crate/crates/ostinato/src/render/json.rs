//! JSON event-list output for rendered phrases, usable for any
//! temperament.

use serde::Serialize;

use crate::render::phrase::Phrase;

#[derive(Serialize)]
struct EventRecord {
    voice: usize,
    onset_units: usize,
    duration_units: usize,
    step: u32,
    octave: i32,
    semitone: i64,
    onset_seconds: f64,
    duration_seconds: f64,
}

#[derive(Serialize)]
struct PhraseFile {
    total_units: usize,
    voices: usize,
    tempo: u32,
    events: Vec<EventRecord>,
}

/// One record per event, sorted by onset then voice; seconds are derived
/// from the phrase's tempo.
pub fn to_json_events(phrase: &Phrase) -> String {
    let unit = phrase.tempo().unit_seconds();
    let mut events: Vec<&crate::render::phrase::NoteEvent> = phrase.events().iter().collect();
    events.sort_by_key(|event| (event.onset, event.voice));
    let file = PhraseFile {
        total_units: phrase.total_units(),
        voices: phrase.voice_count(),
        tempo: phrase.tempo().eighths_per_minute(),
        events: events
            .into_iter()
            .map(|event| EventRecord {
                voice: event.voice,
                onset_units: event.onset,
                duration_units: event.duration,
                step: event.note.step(),
                octave: event.note.octave(),
                semitone: event.note.semitone(),
                onset_seconds: event.onset as f64 * unit,
                duration_seconds: event.duration as f64 * unit,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serializable");
    text.push('\n');
    text
}
