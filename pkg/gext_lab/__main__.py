from gext_lab.helpers.cli import cli

if __name__ == "__main__":
    cli(prog_name="gext-lab")
