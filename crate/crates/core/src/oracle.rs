pub struct CrossCheckReport;
