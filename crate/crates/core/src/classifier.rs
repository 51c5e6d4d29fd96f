pub struct Verdict;
pub enum VerdictStatus {}
pub fn in_xp() {}
