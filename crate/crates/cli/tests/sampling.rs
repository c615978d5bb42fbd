//! Length-3 word frequencies of sampled trajectories against enumeration.

use hqmm::analysis::{enumerate_distribution, Sampler};
use hqmm::Process;
use hqmm_cli::bundled;
use hqmm_cli::io::Model;

const SAMPLES: usize = 1_000_000;

fn check<P: Process>(name: &str, m: &P, seed: u64) {
    let exact = enumerate_distribution(m, 3, None).unwrap();
    let k = m.alphabet().len();
    let mut counts = vec![0usize; k * k * k];
    let mut sampler = Sampler::new(m, seed, None).unwrap();
    for _ in 0..SAMPLES {
        let w = sampler.word(3).unwrap();
        counts[(w[0] * k + w[1]) * k + w[2]] += 1;
    }
    for (i, (&c, &p)) in counts.iter().zip(exact.probabilities()).enumerate() {
        let f = c as f64 / SAMPLES as f64;
        let sigma = (p * (1.0 - p) / SAMPLES as f64).sqrt();
        assert!((f - p).abs() <= 4.0 * sigma + 1e-12, "{name} word #{i}: frequency {f}, probability {p}");
    }
}

#[test]
fn bundled_models_sample_their_distribution() {
    std::thread::scope(|scope| {
        for (i, name) in bundled::names().enumerate() {
            scope.spawn(move || {
                let f = bundled::load(name).unwrap();
                let seed = 1000 + i as u64;
                match &f.model {
                    Model::Hmm(m) => check(name, m, seed),
                    other => check(name, &other.quantum().unwrap().unwrap(), seed),
                }
            });
        }
    });
}
