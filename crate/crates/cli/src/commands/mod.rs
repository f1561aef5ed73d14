pub mod harvester;
pub mod hopfield;
pub mod inspect;
pub mod rules;
pub mod simulate;
pub mod synth;
