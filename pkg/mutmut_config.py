def init():
    pass


def pre_mutation(context, **_):
    if '@dispatch' in context.current_source_line or '@class_shortcut' in context.current_source_line:
        context.skip = True
        return

    if '__tests.py' in context.filename or context.filename.endswith('trace.py'):
        context.skip = True

    # run only relevant test module
    context.config.test_command += ' ' + context.filename[:-len('.py')] + '__tests.py'
