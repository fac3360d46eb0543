#!/usr/bin/env python3
"""Interactive setup script for the engine's .env configuration.

Walks through the coefficient field, search caps, threads and log level.
Preserves unrecognized .env lines on re-run.

Uses only Python stdlib, so it runs before the dependencies are installed.
The GF(p) choice is checked with config.parse_field and needs sympy.
"""

import os
import sys

# ANSI color codes
GREEN = "\033[0;32m"
YELLOW = "\033[1;33m"
RED = "\033[0;31m"
CYAN = "\033[0;36m"
BOLD = "\033[1m"
NC = "\033[0m"  # No Color

# Keys managed by this script (order matters for output)
MANAGED_KEYS = [
    "STANLEY_FIELD",
    "STANLEY_SHELLING_CAP", "STANLEY_GENERATOR_CAP", "STANLEY_BOX_CAP",
    "STANLEY_THREADS", "STANLEY_LOG_LEVEL",
]

DEFAULTS = {
    "STANLEY_FIELD": "q",
    "STANLEY_SHELLING_CAP": "24",
    "STANLEY_GENERATOR_CAP": "24",
    "STANLEY_BOX_CAP": "4096",
    "STANLEY_THREADS": "1",
    "STANLEY_LOG_LEVEL": "INFO",
}


def ask(prompt, default=""):
    """Prompt for a value with optional default."""
    if default:
        raw = input(f"  {prompt} [{default}]: ").strip()
        return raw if raw else default
    return input(f"  {prompt}: ").strip()


def ask_int(prompt, default):
    """Prompt for a positive integer, falling back to the default."""
    raw = ask(prompt, default)
    if raw.isdigit() and int(raw) > 0:
        return raw
    print(f"{RED}Not a positive integer, using {default}.{NC}")
    return default


def ask_choice(prompt, options, default=1):
    """Prompt the user to pick from a numbered list."""
    for i, (label, _) in enumerate(options, 1):
        print(f"  {i}) {label}")
    raw = input(f"  {prompt} [{default}]: ").strip()
    try:
        idx = int(raw) if raw else default
        if 1 <= idx <= len(options):
            return options[idx - 1][1]
    except ValueError:
        pass
    print(f"{RED}Invalid choice, using default.{NC}")
    return options[default - 1][1]


def ask_yn(prompt, default="n"):
    """Ask a yes/no question."""
    raw = input(f"  {prompt} (y/n) [{default}]: ").strip().lower()
    if not raw:
        raw = default
    return raw in ("y", "yes")


def load_existing_env(path=".env"):
    """Load existing .env file, returning (dict of known values, list of extra lines)."""
    values = {}
    extra_lines = []
    if not os.path.exists(path):
        return values, extra_lines
    with open(path, "r") as f:
        for line in f:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" in stripped:
                key, _, val = stripped.partition("=")
                key = key.strip()
                val = val.strip()
                if key in MANAGED_KEYS:
                    values[key] = val
                else:
                    extra_lines.append(stripped)
    return values, extra_lines


def section_field(defaults):
    """Coefficient field section. Returns dict of values."""
    print(f"{YELLOW}Coefficient Field{NC}")
    prev = defaults.get("STANLEY_FIELD", DEFAULTS["STANLEY_FIELD"])
    kind = ask_choice(
        "Choose",
        [("rationals (q)", "q"), ("prime field GF(p)", "p")],
        default=2 if prev.startswith("p:") else 1,
    )
    if kind == "q":
        print()
        return {"STANLEY_FIELD": "q"}
    prev_p = prev[2:] if prev.startswith("p:") else "2"
    p = ask("Characteristic p", prev_p)
    from config import parse_field

    try:
        parse_field(f"p:{p}")
    except ValueError:
        print(f"{RED}{p} is not prime, using rationals.{NC}")
        print()
        return {"STANLEY_FIELD": "q"}
    print()
    return {"STANLEY_FIELD": f"p:{p}"}


def section_caps(defaults):
    """Search cap section. Returns dict of values."""
    print(f"{YELLOW}Search Caps{NC}")
    result = {
        "STANLEY_SHELLING_CAP": ask_int(
            "Max facets for the shelling search",
            defaults.get("STANLEY_SHELLING_CAP", DEFAULTS["STANLEY_SHELLING_CAP"]),
        ),
        "STANLEY_GENERATOR_CAP": ask_int(
            "Max generators for the linear-quotient search",
            defaults.get("STANLEY_GENERATOR_CAP", DEFAULTS["STANLEY_GENERATOR_CAP"]),
        ),
        "STANLEY_BOX_CAP": ask_int(
            "Max candidate monomials for filtration search",
            defaults.get("STANLEY_BOX_CAP", DEFAULTS["STANLEY_BOX_CAP"]),
        ),
    }
    print()
    return result


def section_runtime(defaults):
    """Threads and logging section. Returns dict of values."""
    print(f"{YELLOW}Runtime{NC}")
    threads = ask_int("Worker threads for homology", defaults.get("STANLEY_THREADS", "1"))
    prev_level = defaults.get("STANLEY_LOG_LEVEL", "INFO").upper()
    levels = ["DEBUG", "INFO", "WARNING", "ERROR"]
    level = ask_choice(
        "Log level",
        [(name, name) for name in levels],
        default=levels.index(prev_level) + 1 if prev_level in levels else 2,
    )
    print()
    return {"STANLEY_THREADS": threads, "STANLEY_LOG_LEVEL": level}


def write_env(values, extra_lines, path=".env"):
    """Write .env file from collected values and preserved extra lines."""
    lines = []

    lines.append("# Coefficient field: q or p:<prime>")
    lines.append(f"STANLEY_FIELD={values.get('STANLEY_FIELD', DEFAULTS['STANLEY_FIELD'])}")
    lines.append("")

    lines.append("# Search caps")
    for key in ("STANLEY_SHELLING_CAP", "STANLEY_GENERATOR_CAP", "STANLEY_BOX_CAP"):
        lines.append(f"{key}={values.get(key, DEFAULTS[key])}")
    lines.append("")

    lines.append("# Runtime")
    lines.append(f"STANLEY_THREADS={values.get('STANLEY_THREADS', DEFAULTS['STANLEY_THREADS'])}")
    lines.append(f"STANLEY_LOG_LEVEL={values.get('STANLEY_LOG_LEVEL', DEFAULTS['STANLEY_LOG_LEVEL'])}")

    if extra_lines:
        lines.append("")
        lines.append("# Additional settings")
        lines.extend(extra_lines)

    lines.append("")  # trailing newline

    with open(path, "w") as f:
        f.write("\n".join(lines))


def main():
    print()
    print(f"{CYAN}{BOLD}========================================{NC}")
    print(f"{CYAN}{BOLD}  Stanley Engine Setup{NC}")
    print(f"{CYAN}{BOLD}========================================{NC}")
    print()

    defaults, extra_lines = load_existing_env()

    if defaults:
        print("Existing .env found; values shown as defaults in [brackets].")
    else:
        print("No .env file found. Let's configure the engine.")
    print("Press Enter to accept defaults.")
    print()

    values = {}
    values.update(section_field(defaults))
    values.update(section_caps(defaults))
    values.update(section_runtime(defaults))

    print(f"{CYAN}Summary:{NC}")
    print(f"  Field:     {values['STANLEY_FIELD']}")
    print(f"  Caps:      shelling {values['STANLEY_SHELLING_CAP']}, "
          f"generators {values['STANLEY_GENERATOR_CAP']}, box {values['STANLEY_BOX_CAP']}")
    print(f"  Threads:   {values['STANLEY_THREADS']}")
    print(f"  Log level: {values['STANLEY_LOG_LEVEL']}")
    print()

    if not ask_yn("Write .env file?", default="y"):
        print("Setup cancelled.")
        sys.exit(0)

    write_env(values, extra_lines)
    print(f"{GREEN}.env file created successfully!{NC}")
    print()


if __name__ == "__main__":
    main()
