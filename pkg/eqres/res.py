EQRES_LOGO = "🧮 eqres"

SCHEMA = "eqres/1"

# exit codes of the command line interface
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_GUARDRAIL = 3
