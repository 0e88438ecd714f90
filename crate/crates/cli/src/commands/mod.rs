pub mod converge;
pub mod harmonic;
pub mod impedance;
pub mod netlist;
pub mod oracle;
pub mod region;
