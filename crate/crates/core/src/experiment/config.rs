use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::{Estimator, ExperimentConfig};
use crate::domain::Domain;
use crate::error::{Error, Result};

/// On-disk experiment description. Every field is optional; present fields
/// override the values they are applied to.
///
/// ```toml
/// domain = "annulus:0.25,1"
/// alphas = [0.2, 0.24]
/// sizes = [1000, 3000, 10000]
/// replicates = 100
/// seed = 7
/// estimator = "shape"
/// output = "out/corona"
/// ```
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub domain: Option<String>,
    pub alphas: Option<Vec<f64>>,
    pub sizes: Option<Vec<usize>>,
    pub replicates: Option<usize>,
    pub seed: Option<u64>,
    pub estimator: Option<Estimator>,
    pub output: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        text.parse()
    }

    /// Overwrites the fields of `config` that this file sets.
    pub fn apply(&self, config: &mut ExperimentConfig) -> Result<()> {
        if let Some(d) = &self.domain {
            config.domain = d.parse::<Domain>()?;
        }
        if let Some(a) = &self.alphas {
            config.alphas = a.clone();
        }
        if let Some(s) = &self.sizes {
            config.sample_sizes = s.clone();
        }
        if let Some(r) = self.replicates {
            config.replicates = r;
        }
        if let Some(s) = self.seed {
            config.master_seed = s;
        }
        if let Some(e) = self.estimator {
            config.estimator = e;
        }
        if let Some(o) = &self.output {
            config.output_path = Some(o.clone());
        }
        Ok(())
    }
}

impl std::str::FromStr for ConfigFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::ConfigParse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_apply() {
        let file: ConfigFile = r#"
            domain = "stadium:1,0.5"
            alphas = [0.1, 0.2]
            sizes = [100, 200, 400]
            replicates = 3
            seed = 11
            estimator = "hull"
        "#
        .parse()
        .unwrap();
        let mut cfg = ExperimentConfig {
            domain: Domain::disk(1.0).unwrap(),
            alphas: vec![0.5],
            sample_sizes: vec![10],
            replicates: 1,
            master_seed: 0,
            estimator: Estimator::Shape,
            output_path: None,
        };
        file.apply(&mut cfg).unwrap();
        assert_eq!(cfg.domain, Domain::stadium(1.0, 0.5).unwrap());
        assert_eq!(cfg.alphas, vec![0.1, 0.2]);
        assert_eq!(cfg.sample_sizes, vec![100, 200, 400]);
        assert_eq!((cfg.replicates, cfg.master_seed), (3, 11));
        assert_eq!(cfg.estimator, Estimator::Hull);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_domains() {
        assert!(matches!(
            "replicas = 3".parse::<ConfigFile>(),
            Err(Error::ConfigParse(_))
        ));
        let file: ConfigFile = "domain = \"torus:1\"".parse().unwrap();
        let mut cfg = ExperimentConfig {
            domain: Domain::disk(1.0).unwrap(),
            alphas: vec![0.5],
            sample_sizes: vec![10],
            replicates: 1,
            master_seed: 0,
            estimator: Estimator::Shape,
            output_path: None,
        };
        assert!(file.apply(&mut cfg).is_err());
    }
}
