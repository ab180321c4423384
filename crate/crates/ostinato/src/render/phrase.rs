use crate::error::Result;
use crate::patterns::MultiPattern;
use crate::render::scale::{Note, RootedScale, Tempo};

/// One sounded note: voice number (from 1), onset and duration in units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoteEvent {
    pub voice: usize,
    pub onset: usize,
    pub duration: usize,
    pub note: Note,
}

/// A rendered multi-pattern: timed note events over a fixed total span.
///
/// Within a voice, every beat is sustained through the rests that follow
/// it, so events are contiguous after any leading silence, and the event
/// count of a voice equals the pattern's arity.
#[derive(Debug, Clone, PartialEq)]
pub struct Phrase {
    voice_count: usize,
    total_units: usize,
    tempo: Tempo,
    events: Vec<NoteEvent>,
}

impl Phrase {
    pub fn voice_count(&self) -> usize {
        self.voice_count
    }

    /// Length of the source pattern, in units.
    pub fn total_units(&self) -> usize {
        self.total_units
    }

    pub fn tempo(&self) -> Tempo {
        self.tempo
    }

    pub fn events(&self) -> &[NoteEvent] {
        &self.events
    }

    /// Events of one voice (numbered from 1), in onset order.
    pub fn voice_events(&self, voice: usize) -> impl Iterator<Item = &NoteEvent> {
        self.events.iter().filter(move |event| event.voice == voice)
    }
}

/// Interprets a multi-pattern under a rooted scale and a tempo: the
/// `i`-th degree of a voice sounds on its `i`-th beat and lasts one unit
/// plus the run of rests that follows.
pub fn render(pattern: &MultiPattern, scale: &RootedScale, tempo: Tempo) -> Result<Phrase> {
    let mut events = Vec::new();
    for (index, voice) in pattern.voices().iter().enumerate() {
        let durations = voice.rhythm().durations();
        let counts = durations.counts();
        let mut onset = counts[0];
        for (degree, after) in voice.degrees().entries().iter().zip(&counts[1..]) {
            let duration = 1 + after;
            events.push(NoteEvent {
                voice: index + 1,
                onset,
                duration,
                note: scale.note_for_degree(*degree)?,
            });
            onset += duration;
        }
    }
    Ok(Phrase {
        voice_count: pattern.voice_count(),
        total_units: pattern.len(),
        tempo,
        events,
    })
}
